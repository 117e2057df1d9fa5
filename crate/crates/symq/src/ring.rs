//! A minimal commutative-ring abstraction.
//!
//! Several computations run both over plain rationals and over truncated
//! series (Bell polynomials of series arguments, Gram-Schmidt with a formal
//! deformation parameter). The ring object carries the construction context
//! (variables, truncation) that bare element types cannot supply.

use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::series::Series;

pub trait CoeffRing: Clone {
    type Elem: Clone + PartialEq + std::fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn from_rat(&self, r: &Rat) -> Self::Elem;
    /// Multiplicative inverse; errors when the element is not a unit.
    fn invert(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn scale(&self, a: &Self::Elem, r: &Rat) -> Self::Elem {
        self.mul(a, &self.from_rat(r))
    }
}

/// The field of exact rationals.
#[derive(Clone, Copy, Debug)]
pub struct RatField;

impl CoeffRing for RatField {
    type Elem = Rat;

    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        num_traits::One::one()
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a - b
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a
    }
    fn from_rat(&self, r: &Rat) -> Rat {
        r.clone()
    }
    fn invert(&self, a: &Rat) -> Result<Rat> {
        if a.is_zero() {
            Err(Error::Domain("division by zero".into()))
        } else {
            Ok(a.recip())
        }
    }
}

/// Truncated power series over a fixed variable context.
#[derive(Clone, Debug)]
pub struct SeriesRing {
    vars: Arc<Vec<String>>,
    trunc: u32,
}

impl SeriesRing {
    pub fn new(vars: &[&str], trunc: u32) -> Self {
        SeriesRing {
            vars: Arc::new(vars.iter().map(|s| s.to_string()).collect()),
            trunc,
        }
    }

    fn var_refs(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn variable(&self, name: &str) -> Series {
        Series::variable(&self.var_refs(), self.trunc, name)
    }

    pub fn monomial(&self, name: &str, power: u32, c: Rat) -> Series {
        Series::monomial(&self.var_refs(), self.trunc, name, power, c)
    }

    pub fn geometric(&self, name: &str, step: u32, c: &Rat) -> Series {
        Series::geometric(&self.var_refs(), self.trunc, name, step, c)
    }
}

impl CoeffRing for SeriesRing {
    type Elem = Series;

    fn zero(&self) -> Series {
        Series::zero(&self.var_refs(), self.trunc)
    }
    fn one(&self) -> Series {
        Series::one(&self.var_refs(), self.trunc)
    }
    fn is_zero(&self, a: &Series) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Series, b: &Series) -> Series {
        a.add(b)
    }
    fn sub(&self, a: &Series, b: &Series) -> Series {
        a.sub(b)
    }
    fn mul(&self, a: &Series, b: &Series) -> Series {
        a.mul(b)
    }
    fn neg(&self, a: &Series) -> Series {
        a.neg()
    }
    fn from_rat(&self, r: &Rat) -> Series {
        Series::constant(&self.var_refs(), self.trunc, r.clone())
    }
    fn invert(&self, a: &Series) -> Result<Series> {
        if a.constant_term().is_zero() {
            Err(Error::Domain(
                "series inverse requires a unit constant term".into(),
            ))
        } else {
            Ok(a.inv())
        }
    }

    fn scale(&self, a: &Series, r: &Rat) -> Series {
        a.scale(r)
    }
}
