//! Gate words: the syntactic form of `A_p(U; theta_p)`.
//!
//! A word is an ordered token program over an abstract base gate `U`, its
//! inverse, and diagonal gates. Words are built in `D_j` form by the `P/Q`
//! recursion, normalized to powers of `D(theta)`, evaluated against concrete
//! unitaries, iterated, and composed for composite orders. Words stay purely
//! syntactic; all numerics happen in [`apply`](GateWord::apply).

use std::fmt;
use std::str::FromStr;

use crate::angle::{PiRational, UnitAngle};
use crate::coeffs::alpha0_exponent;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::unitary::{DiagonalGate, Unitary2};

/// One token of a gate word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateToken {
    /// The base gate `U`.
    Base,
    /// `U^{-1}`.
    BaseInverse,
    /// `D_j(theta_p) = diag(lambda_{j0}, lambda_{j1})`.
    DiagJ(u32),
    /// `D(theta)^m` in the active diagonal convention.
    DiagPow(i64),
}

impl GateToken {
    pub fn is_base_kind(&self) -> bool {
        matches!(self, GateToken::Base | GateToken::BaseInverse)
    }
}

/// Which matrix `D(theta)` denotes when realizing `DiagPow` tokens.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Convention {
    /// `D(theta) = diag(1, e^{i theta})`.
    #[default]
    Diag1,
    /// `D(theta) = diag(omega, omega^{-1})` with `omega = e^{i theta/2}`.
    Omega,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Convention::Diag1 => write!(f, "diag1"),
            Convention::Omega => write!(f, "omega"),
        }
    }
}

impl FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "diag1" => Ok(Convention::Diag1),
            "omega" => Ok(Convention::Omega),
            other => Err(Error::WordParse(format!("unknown convention `{other}`"))),
        }
    }
}

/// An ordered token program with its angle, accumulated global phase, and
/// order `n` (so `2n + 1` base-kind tokens and `2n` diagonal tokens).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GateWord {
    pub tokens: Vec<GateToken>,
    /// The angle theta as an exact rational multiple of pi; `1/p` for every
    /// word this module constructs.
    pub theta: PiRational,
    /// Phase factored out of the word so far (normalization drops one
    /// `lambda_{j0}` per diagonal token). The realized matrix of the original
    /// word equals `global_phase` times the realized matrix of this one.
    pub global_phase: UnitAngle,
    pub order: u32,
    pub convention: Convention,
}

impl GateWord {
    /// `p = 2n + 1`; equals the denominator of theta.
    pub fn p(&self) -> u64 {
        self.theta.den() as u64
    }

    /// Check the word-shape invariants: base/diagonal alternation, `Base` at
    /// both ends, strictly alternating base orientations, token counts for
    /// the stated order, diagonal indices in range and powers nonzero.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        let expect_len = (4 * n + 1) as usize;
        if self.tokens.len() != expect_len {
            return Err(Error::MalformedWord(format!(
                "expected {expect_len} tokens for order {n}, found {}",
                self.tokens.len()
            )));
        }
        let mut base_seen = 0u32;
        for (i, t) in self.tokens.iter().enumerate() {
            let base_position = i % 2 == 0;
            if t.is_base_kind() != base_position {
                return Err(Error::MalformedWord(format!(
                    "token {i} breaks base/diagonal alternation"
                )));
            }
            match t {
                GateToken::Base => {
                    if !base_seen.is_multiple_of(2) {
                        return Err(Error::MalformedWord(format!(
                            "base token {base_seen} should be inverted"
                        )));
                    }
                    base_seen += 1;
                }
                GateToken::BaseInverse => {
                    if base_seen % 2 != 1 {
                        return Err(Error::MalformedWord(format!(
                            "base token {base_seen} should not be inverted"
                        )));
                    }
                    base_seen += 1;
                }
                GateToken::DiagJ(j) => {
                    if *j < 1 || *j > n {
                        return Err(Error::MalformedWord(format!("diagonal index {j} out of range")));
                    }
                }
                GateToken::DiagPow(m) => {
                    if *m == 0 {
                        return Err(Error::MalformedWord("zero diagonal power".into()));
                    }
                }
            }
        }
        if base_seen != 2 * n + 1 {
            return Err(Error::MalformedWord(format!(
                "expected {} base tokens, found {base_seen}",
                2 * n + 1
            )));
        }
        Ok(())
    }

    fn is_diag_pow_form(&self) -> bool {
        self.tokens.iter().all(|t| !matches!(t, GateToken::DiagJ(_)))
    }

    /// Diagonal powers in order of appearance, for words in `D(theta)^m` form.
    pub fn diag_powers(&self) -> Vec<i64> {
        self.tokens
            .iter()
            .filter_map(|t| match t {
                GateToken::DiagPow(m) => Some(*m),
                _ => None,
            })
            .collect()
    }

    fn diag_pow_matrix<T: Real>(&self, m: i64) -> Unitary2<T> {
        let zero = num_complex::Complex::new(T::zero(), T::zero());
        match self.convention {
            Convention::Diag1 => {
                // diag(1, e^{i m theta}) = e^{i m theta / 2} diag(e^{-i m theta/2}, e^{i m theta/2})
                let a = UnitAngle::new(-m * self.theta.num(), 2 * self.theta.den()).value();
                let phi = self.theta.value::<T>() * T::from_i64_exact(m);
                Unitary2::new_unchecked(a, zero, phi)
            }
            Convention::Omega => {
                // diag(omega^m, omega^{-m}), det = 1
                let a = UnitAngle::new(m * self.theta.num(), 2 * self.theta.den()).value();
                Unitary2::new_unchecked(a, zero, T::zero())
            }
        }
    }

    /// Realize the word with every `Base` bound to `u0`.
    pub fn apply<T: Real>(&self, u0: &Unitary2<T>) -> Unitary2<T> {
        let u_dag = u0.dagger();
        let mut acc = Unitary2::identity();
        for t in &self.tokens {
            let m = match t {
                GateToken::Base => *u0,
                GateToken::BaseInverse => u_dag,
                GateToken::DiagJ(j) => DiagonalGate::new(*j, self.p())
                    .expect("validated word has in-range diagonal indices")
                    .matrix(),
                GateToken::DiagPow(m) => self.diag_pow_matrix(*m),
            };
            acc = acc.mul(&m);
        }
        acc
    }

    /// Syntactic inverse: tokens reversed, base kinds flipped, powers negated.
    /// Only defined for words in diagonal-power form.
    pub fn inverse(&self) -> Result<GateWord> {
        if !self.is_diag_pow_form() {
            return Err(Error::WrongWordForm { expected: "diagonal-power" });
        }
        let tokens = self
            .tokens
            .iter()
            .rev()
            .map(|t| match t {
                GateToken::Base => GateToken::BaseInverse,
                GateToken::BaseInverse => GateToken::Base,
                GateToken::DiagPow(m) => GateToken::DiagPow(-m),
                GateToken::DiagJ(_) => unreachable!(),
            })
            .collect();
        Ok(GateWord {
            tokens,
            theta: self.theta,
            global_phase: self.global_phase.conj(),
            order: self.order,
            convention: self.convention,
        })
    }
}

/// Build the order-`n` word `Q_n U^{(-1)^n} P_n` in `D_j` form from the
/// recursion `P_{j+1} = D_{j+1} U^{(-1)^j} P_j`, `Q_{j+1} = Q_j U^{(-1)^j} D_{j+1}`
/// with `P_0 = Q_0 = I`.
pub fn build_word(n: u32) -> Result<GateWord> {
    if n < 1 {
        return Err(Error::InvalidOrder);
    }
    let p = 2 * n as i64 + 1;
    let mut p_word: Vec<GateToken> = Vec::new();
    let mut q_word: Vec<GateToken> = Vec::new();
    for j in 0..n {
        let base = if j % 2 == 0 { GateToken::Base } else { GateToken::BaseInverse };
        let mut grown = vec![GateToken::DiagJ(j + 1), base];
        grown.append(&mut p_word);
        p_word = grown;
        q_word.push(base);
        q_word.push(GateToken::DiagJ(j + 1));
    }
    let mut tokens = q_word;
    tokens.push(if n.is_multiple_of(2) { GateToken::Base } else { GateToken::BaseInverse });
    tokens.append(&mut p_word);
    let word = GateWord {
        tokens,
        theta: PiRational::new(1, p),
        global_phase: UnitAngle::one(),
        order: n,
        convention: Convention::Diag1,
    };
    word.validate()?;
    Ok(word)
}

/// Replace every `D_j` by the power of `D(theta)` it equals up to phase:
/// `D_j = lambda_{j0} D(theta)^{m_j}` with `m_j = j` for odd `j` and
/// `m_j = p - j` for even `j`. One `lambda_{j0}` per replaced token
/// accumulates on the global phase, so the realized matrices agree up to the
/// recorded phase.
pub fn normalize_word(word: &GateWord) -> Result<GateWord> {
    if word.tokens.iter().any(|t| matches!(t, GateToken::DiagPow(_))) {
        return Err(Error::WrongWordForm { expected: "D_j" });
    }
    let p = word.p();
    let mut phase = word.global_phase;
    let tokens = word
        .tokens
        .iter()
        .map(|t| match t {
            GateToken::DiagJ(j) => {
                let g = DiagonalGate::new(*j, p).expect("validated word");
                phase = phase.mul(&g.lambda0);
                let m = if j % 2 == 1 { *j as i64 } else { p as i64 - *j as i64 };
                GateToken::DiagPow(m)
            }
            other => *other,
        })
        .collect();
    let out = GateWord {
        tokens,
        theta: word.theta,
        global_phase: phase,
        order: word.order,
        convention: word.convention,
    };
    out.validate()?;
    Ok(out)
}

/// Compose two diagonal-power words for odd orders `N1`, `N2` into the word
/// for `N = N1*N2` at `theta = pi/N`: powers of the inner word are rescaled
/// by `N/N1`, powers of the outer word by `N/N2`, and every base token of the
/// outer word is replaced by the (possibly inverted) rescaled inner word.
pub fn compose_words(inner: &GateWord, outer: &GateWord) -> Result<GateWord> {
    for w in [inner, outer] {
        if !w.is_diag_pow_form() {
            return Err(Error::WrongWordForm { expected: "diagonal-power" });
        }
        let n = w.p();
        if n < 3 || n % 2 == 0 {
            return Err(Error::InvalidP(n));
        }
    }
    if inner.convention != outer.convention {
        return Err(Error::MalformedWord("convention mismatch in composition".into()));
    }
    let n1 = inner.p() as i64;
    let n2 = outer.p() as i64;

    let scale = |w: &GateWord, f: i64| -> GateWord {
        let tokens = w
            .tokens
            .iter()
            .map(|t| match t {
                GateToken::DiagPow(m) => GateToken::DiagPow(m * f),
                other => *other,
            })
            .collect();
        GateWord {
            tokens,
            theta: PiRational::new(1, n1 * n2),
            global_phase: w.global_phase,
            order: w.order,
            convention: w.convention,
        }
    };

    let inner_scaled = scale(inner, n2);
    let inner_inverse = inner_scaled.inverse()?;
    let outer_scaled = scale(outer, n1);

    let mut tokens = Vec::with_capacity((n1 * n2 * 2 - 1) as usize);
    for t in &outer_scaled.tokens {
        match t {
            GateToken::Base => tokens.extend_from_slice(&inner_scaled.tokens),
            GateToken::BaseInverse => tokens.extend_from_slice(&inner_inverse.tokens),
            other => tokens.push(*other),
        }
    }
    let word = GateWord {
        tokens,
        theta: PiRational::new(1, n1 * n2),
        global_phase: inner.global_phase.mul(&outer.global_phase),
        order: ((n1 * n2 - 1) / 2) as u32,
        convention: inner.convention,
    };
    word.validate()?;
    Ok(word)
}

/// The correction gate `F = diag(alpha_0^{-1}, alpha_0)`; post-multiplying
/// each iterate by `F` cancels the residual rotation of the diagonal limit,
/// so the iteration converges to a fixed diagonal gate instead of circling.
pub fn correction_gate<T: Real>(n: u32) -> Unitary2<T> {
    let p = 2 * n as i64 + 1;
    let alpha0 = UnitAngle::new(alpha0_exponent(n), 2 * p);
    Unitary2::new_unchecked(
        alpha0.conj().value(),
        num_complex::Complex::new(T::zero(), T::zero()),
        T::zero(),
    )
}

/// Iterate the order-`n` word from `u0`, returning `U_1 .. U_K`. With
/// `correct` set, each step is post-multiplied by [`correction_gate`].
pub fn iterate<T: Real>(u0: &Unitary2<T>, n: u32, k: u32, correct: bool) -> Result<Vec<Unitary2<T>>> {
    if k < 1 {
        return Err(Error::InvalidIterationCount);
    }
    let word = build_word(n)?;
    let f = correction_gate::<T>(n);
    let mut out = Vec::with_capacity(k as usize);
    let mut u = *u0;
    for _ in 0..k {
        u = word.apply(&u);
        if correct {
            u = u.mul(&f);
        }
        out.push(u);
    }
    Ok(out)
}

/// One row of a convergence report: `residual = | |b_{k+1}| - |b_k|^p |`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow<T> {
    pub k: u32,
    pub b_mag: T,
    pub residual: T,
}

/// Track `|b_k|` through `K` applications of the order-`n` word and report
/// the one-step residuals against the `|b|^p` law.
pub fn convergence_report<T: Real>(u0: &Unitary2<T>, n: u32, k: u32) -> Result<Vec<ConvergenceRow<T>>> {
    if k < 1 {
        return Err(Error::InvalidIterationCount);
    }
    let p = 2 * n as i32 + 1;
    let iterates = iterate(u0, n, k, false)?;
    let mut rows = Vec::with_capacity(k as usize);
    let mut prev = u0.b_mag();
    for (i, u) in iterates.iter().enumerate() {
        let next = u.b_mag();
        rows.push(ConvergenceRow {
            k: i as u32,
            b_mag: prev,
            residual: (next - prev.powi(p)).abs(),
        });
        prev = next;
    }
    Ok(rows)
}

impl fmt::Display for GateWord {
    /// Two lines: a header with theta, the global phase exponent and the
    /// convention, then the token line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "theta={} phase={} convention={}",
            self.theta, self.global_phase, self.convention
        )?;
        let mut first = true;
        for t in &self.tokens {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            match t {
                GateToken::Base => write!(f, "U")?,
                GateToken::BaseInverse => write!(f, "U'")?,
                GateToken::DiagJ(j) => write!(f, "D_{j}")?,
                GateToken::DiagPow(m) => write!(f, "D^{m}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for GateWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::WordParse("missing header line".into()))?;
        let token_line = lines
            .next()
            .ok_or_else(|| Error::WordParse("missing token line".into()))?;

        let mut theta = None;
        let mut phase = None;
        let mut convention = Convention::Diag1;
        for field in header.split_whitespace() {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::WordParse(format!("bad header field `{field}`")))?;
            let parse_frac = |v: &str| -> Result<(i64, i64)> {
                let (a, b) = v
                    .split_once('/')
                    .ok_or_else(|| Error::WordParse(format!("bad fraction `{v}`")))?;
                let a = a.parse().map_err(|_| Error::WordParse(format!("bad fraction `{v}`")))?;
                let b = b.parse().map_err(|_| Error::WordParse(format!("bad fraction `{v}`")))?;
                Ok((a, b))
            };
            match key {
                "theta" => {
                    let (a, b) = parse_frac(value)?;
                    theta = Some(PiRational::new(a, b));
                }
                "phase" => {
                    let (a, b) = parse_frac(value)?;
                    phase = Some(UnitAngle::new(a, b));
                }
                "convention" => convention = value.parse()?,
                other => return Err(Error::WordParse(format!("unknown header key `{other}`"))),
            }
        }
        let theta = theta.ok_or_else(|| Error::WordParse("header missing theta".into()))?;
        let phase = phase.ok_or_else(|| Error::WordParse("header missing phase".into()))?;

        let mut tokens = Vec::new();
        for tok in token_line.split_whitespace() {
            let t = match tok {
                "U" => GateToken::Base,
                "U'" => GateToken::BaseInverse,
                _ if tok.starts_with("D_") => {
                    let j = tok[2..]
                        .parse()
                        .map_err(|_| Error::WordParse(format!("bad token `{tok}`")))?;
                    GateToken::DiagJ(j)
                }
                _ if tok.starts_with("D^") => {
                    let m = tok[2..]
                        .parse()
                        .map_err(|_| Error::WordParse(format!("bad token `{tok}`")))?;
                    GateToken::DiagPow(m)
                }
                other => return Err(Error::WordParse(format!("bad token `{other}`"))),
            };
            tokens.push(t);
        }
        let bases = tokens.iter().filter(|t| t.is_base_kind()).count() as u32;
        if bases == 0 || bases.is_multiple_of(2) {
            return Err(Error::WordParse(format!("expected an odd number of base tokens, found {bases}")));
        }
        let word = GateWord {
            tokens,
            theta,
            global_phase: phase,
            order: (bases - 1) / 2,
            convention,
        };
        word.validate()?;
        Ok(word)
    }
}
