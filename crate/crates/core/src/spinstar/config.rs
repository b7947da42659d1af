use crate::qcore::Spin;
use crate::{Error, Result};

/// Site of central spin A in the full register.
pub const SITE_A: usize = 0;
/// Site of central spin B in the full register.
pub const SITE_B: usize = 1;
/// Bath spin `i` (zero-based) sits at `BATH_OFFSET + i`.
pub const BATH_OFFSET: usize = 2;

/// Two central spins A and B, each coupled with XY exchange to every spin of
/// an `N`-spin bath, with no coupling inside the bath.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinStarConfig {
    bath_size: usize,
    alpha_a: f64,
    alpha_b: f64,
}

impl SpinStarConfig {
    pub fn new(bath_size: usize, alpha_a: f64, alpha_b: f64) -> Result<Self> {
        if bath_size == 0 {
            return Err(Error::InvalidConfig("bath size must be at least 1".into()));
        }
        if !alpha_a.is_finite() || !alpha_b.is_finite() {
            return Err(Error::InvalidConfig("couplings must be finite".into()));
        }
        if alpha_a == 0.0 {
            return Err(Error::InvalidConfig("alpha_a must be nonzero".into()));
        }
        Ok(Self { bath_size, alpha_a, alpha_b })
    }

    /// `alpha_b = ratio * alpha_a`.
    pub fn with_ratio(bath_size: usize, alpha_a: f64, ratio: f64) -> Result<Self> {
        Self::new(bath_size, alpha_a, ratio * alpha_a)
    }

    pub fn bath_size(&self) -> usize {
        self.bath_size
    }

    pub fn alpha_a(&self) -> f64 {
        self.alpha_a
    }

    pub fn alpha_b(&self) -> f64 {
        self.alpha_b
    }

    /// `r = alpha_b / alpha_a`.
    pub fn ratio(&self) -> f64 {
        self.alpha_b / self.alpha_a
    }

    /// Spins in the full register, central pair included.
    pub fn num_spins(&self) -> usize {
        self.bath_size + 2
    }

    /// Same model with the roles of A and B exchanged.
    pub fn swapped(&self) -> Self {
        Self { alpha_a: self.alpha_b, alpha_b: self.alpha_a, ..*self }
    }
}

/// Initial preparations. The two named cases leave the bath in its
/// all-down state, the unique Dicke state `|N/2, -N/2>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InitialState {
    /// `|+1_A, -1_B> ⊗ |N/2, -N/2>`
    Case1,
    /// `|+1_A, +1_B> ⊗ |N/2, -N/2>`
    Case2,
    /// Arbitrary product state over the full register, ordered
    /// `(A, B, bath_1, …, bath_N)`.
    Product(Vec<Spin>),
}

impl InitialState {
    /// Product-state spins over a register with `cfg.num_spins()` sites.
    pub fn spins(&self, cfg: &SpinStarConfig) -> Result<Vec<Spin>> {
        let n = cfg.num_spins();
        let bath_down = std::iter::repeat_n(Spin::Down, cfg.bath_size());
        match self {
            InitialState::Case1 => Ok([Spin::Up, Spin::Down].into_iter().chain(bath_down).collect()),
            InitialState::Case2 => Ok([Spin::Up, Spin::Up].into_iter().chain(bath_down).collect()),
            InitialState::Product(spins) if spins.len() == n => Ok(spins.clone()),
            InitialState::Product(spins) => {
                Err(Error::InvalidConfig(format!("product state has {} spins, register has {n}", spins.len())))
            }
        }
    }

    /// The central-pair spins, provided the bath starts all down.
    pub fn central_pair_over_ground_bath(&self, cfg: &SpinStarConfig) -> Result<(Spin, Spin)> {
        let spins = self.spins(cfg)?;
        if spins[BATH_OFFSET..].iter().any(|&s| s != Spin::Down) {
            return Err(Error::InvalidConfig("bath must start in its all-down Dicke state".into()));
        }
        Ok((spins[SITE_A], spins[SITE_B]))
    }

    pub fn name(&self) -> &'static str {
        match self {
            InitialState::Case1 => "case1",
            InitialState::Case2 => "case2",
            InitialState::Product(_) => "product",
        }
    }
}
