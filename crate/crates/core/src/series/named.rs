//! Constructors for the named series of the level-7 theory, plus a caching
//! build context used by the identity registry.

use std::cell::RefCell;
use std::collections::HashMap;

use super::{eta_series, from_product, ProductSpec, PuiseuxSeries, SeriesError, DEFAULT_GRID};
use crate::exact::{rat, rat_int, Rational};

type Series = PuiseuxSeries<Rational>;

/// Every named series the crate can expand.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SeriesName {
    /// u = q^(1/56) (1-q^(7k+3))(1-q^(7k+4))(1-q^(7k+7)) over k >= 0
    U,
    /// v = q^(9/56) (1-q^(7k+2))(1-q^(7k+5))(1-q^(7k+7))
    V,
    /// w = q^(25/56) (1-q^(7k+1))(1-q^(7k+6))(1-q^(7k+7))
    W,
    /// s = u/w, leading term q^(-3/7)
    S,
    /// t = v/w, leading term q^(-2/7)
    T,
    /// h = u v^2 / w^3, the Hauptmodul; leading term q^(-1)
    H,
    /// z = (h^3 - 3h + 1) / (h (h - 1)); built from h, so that the relation
    /// z = (eta/eta7)^4 + 8 stays a nontrivial registry check
    Z,
    /// Dedekind eta(tau)
    Eta,
    /// eta(7 tau)
    Eta7,
    /// (eta/eta7)^4
    EtaQuot4,
    /// j_7^* = (eta/eta7)^4 + 13 + 49 (eta7/eta)^4
    J7Star,
}

impl SeriesName {
    pub const ALL: [SeriesName; 11] = [
        SeriesName::U,
        SeriesName::V,
        SeriesName::W,
        SeriesName::S,
        SeriesName::T,
        SeriesName::H,
        SeriesName::Z,
        SeriesName::Eta,
        SeriesName::Eta7,
        SeriesName::EtaQuot4,
        SeriesName::J7Star,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SeriesName::U => "u",
            SeriesName::V => "v",
            SeriesName::W => "w",
            SeriesName::S => "s",
            SeriesName::T => "t",
            SeriesName::H => "h",
            SeriesName::Z => "z",
            SeriesName::Eta => "eta",
            SeriesName::Eta7 => "eta7",
            SeriesName::EtaQuot4 => "etaquot4",
            SeriesName::J7Star => "j7star",
        }
    }

    pub fn parse(name: &str) -> Option<SeriesName> {
        Self::ALL.iter().copied().find(|n| n.as_str() == name)
    }
}

/// Product data for the directly expandable series.
pub fn product_spec(name: SeriesName) -> Option<ProductSpec> {
    let spec = match name {
        SeriesName::U => ProductSpec::new(rat(1, 56), vec![(3, 7, 1), (4, 7, 1), (7, 7, 1)]),
        SeriesName::V => ProductSpec::new(rat(9, 56), vec![(2, 7, 1), (5, 7, 1), (7, 7, 1)]),
        SeriesName::W => ProductSpec::new(rat(25, 56), vec![(1, 7, 1), (6, 7, 1), (7, 7, 1)]),
        SeriesName::S => ProductSpec::new(
            rat(-3, 7),
            vec![(3, 7, 1), (4, 7, 1), (1, 7, -1), (6, 7, -1)],
        ),
        SeriesName::T => ProductSpec::new(
            rat(-2, 7),
            vec![(2, 7, 1), (5, 7, 1), (1, 7, -1), (6, 7, -1)],
        ),
        SeriesName::H => ProductSpec::new(
            rat_int(-1),
            vec![
                (3, 7, 1),
                (4, 7, 1),
                (2, 7, 2),
                (5, 7, 2),
                (1, 7, -3),
                (6, 7, -3),
            ],
        ),
        _ => return None,
    };
    Some(spec)
}

/// Build a named series truncated at q^(trunc/grid). Derived series (z,
/// etaquot4, j7star) involve inversions, so their tracked truncation comes
/// out somewhat below `trunc`; the loss is exact and visible in the result.
pub fn named_series(name: SeriesName, grid: i64, trunc: i64) -> Result<Series, SeriesError> {
    if let Some(spec) = product_spec(name) {
        return from_product(&spec, grid, trunc);
    }
    match name {
        SeriesName::Eta => eta_series(1, grid, trunc),
        SeriesName::Eta7 => eta_series(7, grid, trunc),
        SeriesName::EtaQuot4 => {
            let eta = eta_series::<Rational>(1, grid, trunc)?;
            let eta7 = eta_series::<Rational>(7, grid, trunc)?;
            eta.checked_mul(&eta7.invert()?)?.int_pow(4)
        }
        SeriesName::Z => {
            let h = named_series(SeriesName::H, grid, trunc)?;
            let one = Series::one(grid, trunc);
            let h2 = h.checked_mul(&h)?;
            let h3 = h2.checked_mul(&h)?;
            let num = h3.checked_sub(&h.scale(&rat_int(3)))?.checked_add(&one)?;
            let den = h.checked_mul(&h.checked_sub(&one)?)?;
            num.checked_mul(&den.invert()?)
        }
        SeriesName::J7Star => {
            let e = named_series(SeriesName::EtaQuot4, grid, trunc)?;
            let thirteen = Series::constant(rat_int(13), grid, e.trunc());
            e.checked_add(&thirteen)?
                .checked_add(&e.invert()?.scale(&rat_int(49)))
        }
        _ => unreachable!("product-backed names handled above"),
    }
}

/// Caching context for identity verification.
///
/// `order` is the integer exponent bound the caller wants verified; base
/// series are built with `slack` extra orders so that the precision lost to
/// inversion and negative leading exponents still leaves the requested
/// window fully known.
///
/// `perturb_u` is a test hook: it adds `delta` to the stored u-coefficient
/// at a chosen exponent numerator, so the test suite can demonstrate that a
/// single corrupted coefficient is caught by the registry.
pub struct BuildContext {
    grid: i64,
    order: i64,
    slack: i64,
    perturb_u: Option<(i64, Rational)>,
    cache: RefCell<HashMap<SeriesName, Series>>,
}

impl BuildContext {
    pub const DEFAULT_SLACK: i64 = 12;

    pub fn new(order: i64) -> Self {
        BuildContext {
            grid: DEFAULT_GRID,
            order,
            slack: Self::DEFAULT_SLACK,
            perturb_u: None,
            cache: RefCell::new(HashMap::new()),
        }
    }

    /// Test hook; see the struct documentation.
    pub fn with_u_perturbation(mut self, exponent_numerator: i64, delta: Rational) -> Self {
        self.perturb_u = Some((exponent_numerator, delta));
        self.cache.borrow_mut().clear();
        self
    }

    /// Override the extra build orders. The default covers the worst
    /// precision loss across the registry; shrinking it makes identities
    /// report insufficient-truncation instead of silently passing short.
    pub fn with_slack(mut self, slack: i64) -> Self {
        assert!(slack >= 0, "slack must be nonnegative");
        self.slack = slack;
        self.cache.borrow_mut().clear();
        self
    }

    pub fn grid(&self) -> i64 {
        self.grid
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// The exponent-numerator bound identities are checked against.
    pub fn target(&self) -> i64 {
        self.order * self.grid
    }

    fn base_trunc(&self) -> i64 {
        (self.order + self.slack) * self.grid
    }

    pub fn series(&self, name: SeriesName) -> Series {
        if let Some(s) = self.cache.borrow().get(&name) {
            return s.clone();
        }
        let mut s = named_series(name, self.grid, self.base_trunc())
            .expect("named series construction cannot fail on the default grid");
        if name == SeriesName::U {
            if let Some((n, delta)) = &self.perturb_u {
                let tweak = Series::from_terms(&[(*n, delta.clone())], self.grid, s.trunc());
                s = s.checked_add(&tweak).expect("same grid");
            }
        }
        self.cache.borrow_mut().insert(name, s.clone());
        s
    }

    pub fn one(&self) -> Series {
        Series::one(self.grid, self.base_trunc())
    }

    pub fn constant(&self, n: i64) -> Series {
        Series::constant(rat_int(n), self.grid, self.base_trunc())
    }
}
