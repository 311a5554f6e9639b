//! Logarithmic and exponential entropies of a soft set built from its
//! roughness values.
//!
//! Each measure exists in two forms: as a plain function of its roughness
//! arguments (module [`forms`]), and evaluated on a partition and soft set.
//! The scalar type is generic; [`crate::EntropyReport64`] and
//! [`crate::Beta64`] are the usual instantiations.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst};
use serde::Serialize;

use crate::error::{Error, Result, Undefined};
use crate::measures::{roughness_pawlak, roughness_yao};
use crate::softset::{SoftSet, SpecialClass};
use crate::space::Partition;
use crate::Ratio;

/// Scalar types the entropies can be evaluated in.
pub trait Real: Float + FloatConst + Debug + Display + Send + Sync {}

impl<T> Real for T where T: Float + FloatConst + Debug + Display + Send + Sync {}

fn lit<F: Real>(x: f64) -> F {
    F::from(x).expect("representable constant")
}

/// Exact ratio to scalar; zero maps to exactly zero.
pub fn from_ratio<F: Real>(r: &Ratio) -> F {
    F::from(*r.numer()).expect("representable") / F::from(*r.denom()).expect("representable")
}

/// Base of the logarithmic and exponential gain terms, strictly above one.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
pub struct Beta<F>(F);

impl<F: Real> Beta<F> {
    pub fn new(value: F) -> Result<Self> {
        if value.is_finite() && value > F::one() + lit(1e-12) {
            Ok(Beta(value))
        } else {
            Err(Error::InvalidBeta(value.to_f64().unwrap_or(f64::NAN)))
        }
    }

    pub fn e() -> Self {
        Beta(F::E())
    }

    pub fn value(self) -> F {
        self.0
    }

    pub fn ln(self) -> F {
        self.0.ln()
    }
}

/// `x ln x` with `0 ln 0 = 0`.
pub fn xlog<F: Real>(x: F) -> F {
    if x == F::zero() {
        F::zero()
    } else {
        x * x.ln()
    }
}

/// The measures as functions of roughness values in `[0, 1]`.
pub mod forms {
    use super::{lit, xlog, Beta, Real};

    /// `-(e/2)(x ln x + y ln y)`
    pub fn ent_1p<F: Real>(x: F, y: F) -> F {
        F::zero() - (F::E() / lit(2.0)) * (xlog(x) + xlog(y))
    }

    /// `-(1/2)(x log_b(x/b) + y log_b(y/b))`
    pub fn ent_2p<F: Real>(x: F, y: F, beta: Beta<F>) -> F {
        let two: F = lit(2.0);
        (x + y) / two - (xlog(x) + xlog(y)) / (two * beta.ln())
    }

    /// `(1/2)(x b^(1-x) + y b^(1-y))`
    pub fn ent_exp<F: Real>(x: F, y: F, beta: Beta<F>) -> F {
        (ent_exp_prime(x, beta) + ent_exp_prime(y, beta)) / lit(2.0)
    }

    /// `-t ln t`
    pub fn ent_3p<F: Real>(t: F) -> F {
        F::zero() - xlog(t)
    }

    /// `-t log_b(t/b)`
    pub fn ent_4p<F: Real>(t: F, beta: Beta<F>) -> F {
        t - xlog(t) / beta.ln()
    }

    /// `t b^(1-t)`
    pub fn ent_exp_prime<F: Real>(t: F, beta: Beta<F>) -> F {
        t * beta.value().powf(F::one() - t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EntropyKind {
    OneP,
    TwoP,
    Exp,
    ThreeP,
    FourP,
    ExpPrime,
}

impl EntropyKind {
    pub const ALL: [EntropyKind; 6] = [
        EntropyKind::OneP,
        EntropyKind::TwoP,
        EntropyKind::Exp,
        EntropyKind::ThreeP,
        EntropyKind::FourP,
        EntropyKind::ExpPrime,
    ];

    /// Short name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            EntropyKind::OneP => "1p",
            EntropyKind::TwoP => "2p",
            EntropyKind::Exp => "exp",
            EntropyKind::ThreeP => "3p",
            EntropyKind::FourP => "4p",
            EntropyKind::ExpPrime => "exp2",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    /// Two-argument forms take `(theta_P(S), theta_P(C(S)))`; the others take
    /// `theta_Y(S)`.
    pub fn arity(self) -> usize {
        match self {
            EntropyKind::OneP | EntropyKind::TwoP | EntropyKind::Exp => 2,
            _ => 1,
        }
    }

    pub fn uses_beta(self) -> bool {
        !matches!(self, EntropyKind::OneP | EntropyKind::ThreeP)
    }

    /// Evaluates the form; `y` is ignored for one-argument kinds.
    pub fn eval<F: Real>(self, x: F, y: F, beta: Beta<F>) -> F {
        match self {
            EntropyKind::OneP => forms::ent_1p(x, y),
            EntropyKind::TwoP => forms::ent_2p(x, y, beta),
            EntropyKind::Exp => forms::ent_exp(x, y, beta),
            EntropyKind::ThreeP => forms::ent_3p(x),
            EntropyKind::FourP => forms::ent_4p(x, beta),
            EntropyKind::ExpPrime => forms::ent_exp_prime(x, beta),
        }
    }

    /// Maximum over `[0,1]` (per argument) and the argument attaining it.
    pub fn maximum<F: Real>(self, beta: Beta<F>) -> (F, F) {
        let b = beta.value();
        let scaled = b / (F::E() * beta.ln());
        match self {
            EntropyKind::OneP => (F::one(), F::E().recip()),
            EntropyKind::ThreeP => (F::E().recip(), F::E().recip()),
            EntropyKind::TwoP | EntropyKind::FourP => {
                if b <= F::E() {
                    (scaled, b / F::E())
                } else {
                    (F::one(), F::one())
                }
            }
            EntropyKind::Exp | EntropyKind::ExpPrime => {
                if b > F::E() {
                    (scaled, beta.ln().recip())
                } else {
                    (F::one(), F::one())
                }
            }
        }
    }
}

fn pawlak_pair<F: Real>(p: &Partition, s: &SoftSet) -> Result<(F, F)> {
    match s.classify() {
        SpecialClass::Ordinary => {}
        SpecialClass::EmptySoftSet => {
            return Err(Error::UndefinedMeasure(Undefined::EmptySoftSet))
        }
        SpecialClass::NullSoftSet => return Err(Error::UndefinedMeasure(Undefined::NullUpper)),
        SpecialClass::WholeSoftSet => {
            return Err(Error::UndefinedMeasure(Undefined::WholeComplement))
        }
    }
    let x = roughness_pawlak(p, s)?;
    let y = roughness_pawlak(p, &s.complement())?;
    Ok((from_ratio(&x), from_ratio(&y)))
}

fn yao_theta<F: Real>(p: &Partition, s: &SoftSet) -> Result<F> {
    roughness_yao(p, s).map(|r| from_ratio(&r))
}

pub fn ent_1p<F: Real>(p: &Partition, s: &SoftSet) -> Result<F> {
    let (x, y) = pawlak_pair(p, s)?;
    Ok(forms::ent_1p(x, y))
}

pub fn ent_2p<F: Real>(p: &Partition, s: &SoftSet, beta: Beta<F>) -> Result<F> {
    let (x, y) = pawlak_pair(p, s)?;
    Ok(forms::ent_2p(x, y, beta))
}

pub fn ent_exp<F: Real>(p: &Partition, s: &SoftSet, beta: Beta<F>) -> Result<F> {
    let (x, y) = pawlak_pair(p, s)?;
    Ok(forms::ent_exp(x, y, beta))
}

pub fn ent_3p<F: Real>(p: &Partition, s: &SoftSet) -> Result<F> {
    Ok(forms::ent_3p(yao_theta(p, s)?))
}

pub fn ent_4p<F: Real>(p: &Partition, s: &SoftSet, beta: Beta<F>) -> Result<F> {
    Ok(forms::ent_4p(yao_theta(p, s)?, beta))
}

pub fn ent_exp_prime<F: Real>(p: &Partition, s: &SoftSet, beta: Beta<F>) -> Result<F> {
    Ok(forms::ent_exp_prime(yao_theta(p, s)?, beta))
}

/// Roughness inputs and every entropy that is defined for the soft set.
///
/// The two-argument measures are absent for a whole soft set, whose
/// complement has no Pawlak-style roughness.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntropyReport<F> {
    pub theta_p: F,
    pub theta_p_complement: Option<F>,
    pub theta_y: F,
    pub beta: Beta<F>,
    pub ent_1p: Option<F>,
    pub ent_2p: Option<F>,
    pub ent_exp: Option<F>,
    pub ent_3p: F,
    pub ent_4p: F,
    pub ent_exp_prime: F,
}

impl<F: Real> EntropyReport<F> {
    pub fn get(&self, kind: EntropyKind) -> Option<F> {
        match kind {
            EntropyKind::OneP => self.ent_1p,
            EntropyKind::TwoP => self.ent_2p,
            EntropyKind::Exp => self.ent_exp,
            EntropyKind::ThreeP => Some(self.ent_3p),
            EntropyKind::FourP => Some(self.ent_4p),
            EntropyKind::ExpPrime => Some(self.ent_exp_prime),
        }
    }
}

pub fn entropy_report<F: Real>(
    p: &Partition,
    s: &SoftSet,
    beta: Beta<F>,
) -> Result<EntropyReport<F>> {
    let theta_y = yao_theta::<F>(p, s)?;
    let theta_p: F = from_ratio(&roughness_pawlak(p, s)?);
    let pair = match s.classify() {
        SpecialClass::Ordinary => Some(pawlak_pair::<F>(p, s)?),
        _ => None,
    };
    Ok(EntropyReport {
        theta_p,
        theta_p_complement: pair.map(|(_, y)| y),
        theta_y,
        beta,
        ent_1p: pair.map(|(x, y)| forms::ent_1p(x, y)),
        ent_2p: pair.map(|(x, y)| forms::ent_2p(x, y, beta)),
        ent_exp: pair.map(|(x, y)| forms::ent_exp(x, y, beta)),
        ent_3p: forms::ent_3p(theta_y),
        ent_4p: forms::ent_4p(theta_y, beta),
        ent_exp_prime: forms::ent_exp_prime(theta_y, beta),
    })
}

/// Maximizes `f` over `[0, 1]`: a uniform sweep of the given step, then a
/// golden-section search on the bracket around the best grid point.
/// Returns `(max value, argmax)`. Assumes `f` is unimodal near its peak.
pub fn sweep_max(f: impl Fn(f64) -> f64, step: f64) -> (f64, f64) {
    let n = (1.0 / step).round() as usize;
    let (mut best_i, mut best) = (0, f(0.0));
    for i in 1..=n {
        let v = f(i as f64 / n as f64);
        if v > best {
            best = v;
            best_i = i;
        }
    }
    let mut lo = (best_i.saturating_sub(1)) as f64 / n as f64;
    let mut hi = ((best_i + 1).min(n)) as f64 / n as f64;
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut a = hi - ratio * (hi - lo);
    let mut b = lo + ratio * (hi - lo);
    let (mut fa, mut fb) = (f(a), f(b));
    while hi - lo > 1e-12 {
        if fa < fb {
            lo = a;
            a = b;
            fa = fb;
            b = lo + ratio * (hi - lo);
            fb = f(b);
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - ratio * (hi - lo);
            fa = f(a);
        }
    }
    let mid = (lo + hi) / 2.0;
    let candidates = [(best, best_i as f64 / n as f64), (f(mid), mid)];
    candidates
        .into_iter()
        .fold((f64::NEG_INFINITY, 0.0), |acc, c| if c.0 > acc.0 { c } else { acc })
}
