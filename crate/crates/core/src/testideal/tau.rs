use num_traits::ToPrimitive;

use super::rational::{ceil_scaled, floor_to_u64, rat_int, ParamPoint, PAdicRational, Rational};
use crate::algebra::{ideal_power, ideal_product, IdealGens, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::frobenius::{root_of_power_with, root_of_product_power, FrobLevel, RootStrategy};
use crate::groebner::{buchberger_with, GbConfig, ReducedGB};

/// A tuple of nonzero ideals `a = (a_1, ..., a_n)` of one ring.
///
/// `gen_counts[i]` is the number of stored generators of `a_i`; Skoda
/// peeling and the fractal identity use these counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFamily {
    ring: Ring,
    ideals: Vec<IdealGens>,
    gen_counts: Vec<u64>,
}

impl IdealFamily {
    pub fn new(ring: &Ring, ideals: Vec<IdealGens>) -> Result<Self> {
        if ideals.is_empty() {
            return Err(Error::InvalidArgument("an ideal family needs at least one ideal".into()));
        }
        for (i, a) in ideals.iter().enumerate() {
            if a.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if a.is_zero() {
                return Err(Error::InvalidArgument(format!("ideal {} of the family is zero", i + 1)));
            }
        }
        let gen_counts = ideals.iter().map(|a| a.len() as u64).collect();
        Ok(IdealFamily {
            ring: ring.clone(),
            ideals,
            gen_counts,
        })
    }

    /// One ideal per string, generators comma-separated.
    pub fn parse<S: AsRef<str>>(ring: &Ring, ideals: &[S]) -> Result<Self> {
        let ideals = ideals
            .iter()
            .map(|s| IdealGens::parse(s.as_ref(), ring))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, ideals)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn ideals(&self) -> &[IdealGens] {
        &self.ideals
    }

    pub fn gen_counts(&self) -> &[u64] {
        &self.gen_counts
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn is_principal(&self) -> bool {
        self.ideals.iter().all(|a| a.is_principal())
    }

    /// Bound on the degrees of all stored generators.
    pub fn max_degree(&self) -> u64 {
        self.ideals.iter().map(|a| a.max_degree()).max().unwrap_or(0)
    }

    /// `a^m = Π a_i^{m_i}` for an integer vector `m`.
    pub fn power(&self, m: &[u64]) -> Result<IdealGens> {
        assert_eq!(m.len(), self.len());
        let mut acc = IdealGens::unit(&self.ring);
        for (a, &k) in self.ideals.iter().zip(m) {
            if k > 0 {
                acc = ideal_product(&acc, &ideal_power(a, k)?);
            }
        }
        Ok(acc)
    }
}

/// Parameters of the stabilization loop for test ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TauConfig {
    /// First Frobenius level tried. For a p-adic point with denominators
    /// `p^s` the loop starts no earlier than `s`.
    pub e_start: u32,
    /// Last level tried before giving up with [`Error::NotStabilized`].
    pub e_max: u32,
    /// Number of consecutive levels whose roots must agree.
    pub confirm_window: u32,
    /// Check the degree bound `⌊d (c_1 + ... + c_n)⌋` on p-adic points.
    pub degree_check: bool,
    /// Peel integer units with Skoda's theorem before computing.
    pub skoda: bool,
    /// Evaluate p-adic points exactly by iterating the Frobenius-root
    /// recursion on exponents below the generator counts, instead of the
    /// windowed `J_e` loop.
    pub exact_padic: bool,
    pub strategy: RootStrategy,
    pub gb: GbConfig,
}

impl Default for TauConfig {
    fn default() -> Self {
        TauConfig {
            e_start: 1,
            e_max: 8,
            confirm_window: 2,
            degree_check: true,
            skoda: true,
            exact_padic: true,
            strategy: RootStrategy::Descent,
            gb: GbConfig::default(),
        }
    }
}

impl TauConfig {
    fn validate(&self) -> Result<()> {
        if self.e_start > self.e_max {
            return Err(Error::InvalidArgument("e_start exceeds e_max".into()));
        }
        if self.confirm_window == 0 {
            return Err(Error::InvalidArgument("confirm_window must be at least 1".into()));
        }
        Ok(())
    }
}

/// `τ(f^λ) = (f^m)^[1/p^e]` for `λ = m / p^e`.
pub fn tau_principal(f: &Polynomial, lambda: PAdicRational) -> Result<IdealGens> {
    if f.is_zero() {
        return Err(Error::Precondition("test ideal of the zero polynomial".into()));
    }
    if lambda.num() == 0 {
        return Ok(IdealGens::unit(f.ring()));
    }
    let level = FrobLevel::new(f.ring().p(), lambda.e())?;
    root_of_power_with(f, lambda.num(), level, RootStrategy::Descent)
}

/// The mixed test ideal `τ(a_1^{c_1} ··· a_n^{c_n})`.
///
/// Returns generators (an `F_p`-linear basis of root components, not a
/// Gröbner basis); use [`tau_mixed_gb`] for the canonical form.
pub fn tau_mixed(fam: &IdealFamily, c: &ParamPoint, cfg: &TauConfig) -> Result<IdealGens> {
    Ok(tau_eval(fam, c, cfg)?.0)
}

/// [`tau_mixed`] together with the reduced Gröbner basis of the result.
pub fn tau_mixed_gb(fam: &IdealFamily, c: &ParamPoint, cfg: &TauConfig) -> Result<(IdealGens, ReducedGB)> {
    let (gens, gb) = tau_eval(fam, c, cfg)?;
    let gb = match gb {
        Some(gb) => gb,
        None => buchberger_with(&gens, &cfg.gb)?,
    };
    Ok((gens, gb))
}

fn tau_eval(fam: &IdealFamily, c: &ParamPoint, cfg: &TauConfig) -> Result<(IdealGens, Option<ReducedGB>)> {
    cfg.validate()?;
    if c.len() != fam.len() {
        return Err(Error::InvalidArgument(format!(
            "point has {} coordinates but the family has {} ideals",
            c.len(),
            fam.len()
        )));
    }
    let ring = fam.ring();
    if c.is_origin() {
        return Ok((IdealGens::unit(ring), None));
    }
    if cfg.skoda {
        let (factor, residual) = skoda_reduce(fam, c)?;
        if !(factor.len() == 1 && factor.gens()[0].is_one()) {
            let inner = tau_mixed(fam, &residual, cfg)?;
            return Ok((ideal_product(&factor, &inner), None));
        }
    }

    let p = ring.p();
    let padic = c.p_adic_level(p);
    let gens = match padic {
        Some(s) if cfg.exact_padic => (tau_padic(fam, &scaled_exponents(c, p, s)?, s, cfg)?, None),
        Some(s) => stabilize(fam, c, cfg.e_start.max(s), cfg)?,
        None if cfg.exact_padic => stabilize_approximants(fam, c, cfg)?,
        None => stabilize(fam, c, cfg.e_start, cfg)?,
    };

    if cfg.degree_check && padic.is_some() {
        let bound = floor_to_u64(&(rat_int(fam.max_degree()) * c.sum()))?;
        if let Some(found) = gens.0.gens().iter().filter_map(|g| g.degree()).find(|&d| d > bound) {
            return Err(Error::DegreeBound { found, bound });
        }
    }
    Ok(gens)
}

fn scaled_exponents(c: &ParamPoint, p: u64, e: u32) -> Result<Vec<u64>> {
    c.coords().iter().map(|ci| ceil_scaled(ci, p, e)).collect()
}

/// `J_e = (Π a_i^{⌈c_i p^e⌉})^[1/p^e]` is ascending in `e`; return it once
/// `confirm_window` consecutive levels agree.
fn stabilize(
    fam: &IdealFamily,
    c: &ParamPoint,
    start: u32,
    cfg: &TauConfig,
) -> Result<(IdealGens, Option<ReducedGB>)> {
    let p = fam.ring().p();
    let mut prev: Option<ReducedGB> = None;
    let mut streak = 0u32;
    for e in start..=cfg.e_max.max(start) {
        let exps = scaled_exponents(c, p, e)?;
        let gens = root_of_product_power(fam.ideals(), &exps, FrobLevel::new(p, e)?, cfg.strategy)?;
        let gb = buchberger_with(&gens, &cfg.gb)?;
        streak = if prev.as_ref() == Some(&gb) { streak + 1 } else { 1 };
        // the chain is ascending, so reaching the unit ideal is final
        if streak >= cfg.confirm_window || gb.is_unit() {
            return Ok((gens, Some(gb)));
        }
        prev = Some(gb);
    }
    Err(Error::NotStabilized { e_max: cfg.e_max })
}

/// `τ(a^{m/p^s})` without a stopping heuristic.
///
/// Write `K_f(k) = (a^{k p^f})^[1/p^f]` and let `r_i` be the generator
/// count of `a_i`. Pigeonholing exponents of products of generators gives
/// `K_f(k) = a^{k - k'} K_f(k')` with `k'_i = min(k_i, r_i - 1)` at every
/// level `f`, hence `K_{f+1}(k) = (a^{kp - k'} K_f(k'))^[1/p]` for
/// `k' = min(kp, r - 1)`. Along the path `k, k', k'', ...` the exponent
/// reaches a fixed point `k*` after a few steps; there the step is a fixed
/// map of ideals, so two equal consecutive values of `K_f(k*)` are final.
/// The answer is `(a^{m - k_0} K(k_0))^[1/p^s]` with `k_0 = min(m, r - 1)`.
fn tau_padic(fam: &IdealFamily, m: &[u64], s: u32, cfg: &TauConfig) -> Result<IdealGens> {
    let p = fam.ring().p();
    let cap = |k: &[u64], scale: u64| -> Vec<u64> {
        k.iter()
            .zip(fam.gen_counts())
            .map(|(&ki, &r)| ki.saturating_mul(scale).min(r - 1))
            .collect()
    };
    let mut path = vec![cap(m, 1)];
    loop {
        let next = cap(path.last().unwrap(), p);
        if &next == path.last().unwrap() {
            break;
        }
        path.push(next);
    }

    let one = FrobLevel::new(p, 1)?;
    // root of a^d · K, with K riding along as one more factor
    let root_with = |d: Vec<u64>, k: &IdealGens, level: FrobLevel| -> Result<IdealGens> {
        let mut ideals = fam.ideals().to_vec();
        ideals.push(k.clone());
        let mut exps = d;
        exps.push(1);
        root_of_product_power(&ideals, &exps, level, cfg.strategy)
    };
    let diff = |hi: &[u64], lo: &[u64]| hi.iter().zip(lo).map(|(a, b)| a - b).collect::<Vec<_>>();

    let fixed = path.last().unwrap().clone();
    let mut k = fam.power(&fixed)?;
    if fixed.iter().any(|&x| x > 0) {
        let step = fixed.iter().map(|&x| x * (p - 1)).collect::<Vec<_>>();
        let mut gb = buchberger_with(&k, &cfg.gb)?;
        let mut settled = false;
        for _ in 0..=cfg.e_max {
            let next = buchberger_with(&root_with(step.clone(), &gb.to_ideal(), one)?, &cfg.gb)?;
            if next == gb {
                settled = true;
                break;
            }
            gb = next;
        }
        if !settled {
            return Err(Error::NotStabilized { e_max: cfg.e_max });
        }
        k = gb.to_ideal();
    }
    for w in path.windows(2).rev() {
        let scaled = w[0].iter().map(|&x| x * p).collect::<Vec<_>>();
        k = buchberger_with(&root_with(diff(&scaled, &w[1]), &k, one)?, &cfg.gb)?.to_ideal();
    }
    root_with(diff(m, &path[0]), &k, FrobLevel::new(p, s)?)
}

/// Non-p-adic points: `τ(a^{⌈c p^e⌉/p^e})` is ascending in `e` and equals
/// `τ(a^c)` for large `e`; return it once `confirm_window` levels agree.
fn stabilize_approximants(
    fam: &IdealFamily,
    c: &ParamPoint,
    cfg: &TauConfig,
) -> Result<(IdealGens, Option<ReducedGB>)> {
    let p = fam.ring().p();
    let mut prev: Option<ReducedGB> = None;
    let mut streak = 0u32;
    for e in cfg.e_start..=cfg.e_max {
        let gens = tau_padic(fam, &scaled_exponents(c, p, e)?, e, cfg)?;
        let gb = buchberger_with(&gens, &cfg.gb)?;
        streak = if prev.as_ref() == Some(&gb) { streak + 1 } else { 1 };
        if streak >= cfg.confirm_window || gb.is_unit() {
            return Ok((gens, Some(gb)));
        }
        prev = Some(gb);
    }
    Err(Error::NotStabilized { e_max: cfg.e_max })
}

/// `J = a_1^{r_1} ··· a_n^{r_n}`; then `τ(a^{λ r}) = τ(J^λ)`.
pub fn reduce_to_single(fam: &IdealFamily, r: &[u64], lambda: &Rational) -> Result<(IdealGens, Rational)> {
    if r.len() != fam.len() {
        return Err(Error::InvalidArgument("direction length differs from family size".into()));
    }
    if r.iter().all(|&x| x == 0) {
        return Err(Error::InvalidArgument("direction must be nonzero".into()));
    }
    Ok((fam.power(r)?, lambda.clone()))
}

/// Skoda peeling: while `s_i >= m_i` (stored generator count), move one
/// unit of `a_i` out of the exponent. Returns `(Π a_i^{k_i}, s - k)` with
/// `τ(a^s) = Π a_i^{k_i} · τ(a^{s-k})` and every residual `s_i - k_i < m_i`.
pub fn skoda_reduce(fam: &IdealFamily, s: &ParamPoint) -> Result<(IdealGens, ParamPoint)> {
    if s.len() != fam.len() {
        return Err(Error::InvalidArgument("point length differs from family size".into()));
    }
    let mut peel = Vec::with_capacity(s.len());
    let mut residual = Vec::with_capacity(s.len());
    for (si, &mi) in s.coords().iter().zip(fam.gen_counts()) {
        let m = rat_int(mi);
        let k = if *si >= m {
            (si - &m).floor().to_integer().to_u64().ok_or(Error::ExponentOverflow)? + 1
        } else {
            0
        };
        residual.push(si - rat_int(k));
        peel.push(k);
    }
    Ok((fam.power(&peel)?, ParamPoint::new(residual)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial;
    use crate::groebner::{ideal_equal, ideal_key};
    use crate::testideal::rational::rat;

    fn ring() -> Ring {
        Ring::new(3, &["x", "y"]).unwrap()
    }

    fn staircase() -> IdealFamily {
        IdealFamily::parse(&ring(), &["x+y", "x*y"]).unwrap()
    }

    fn pt(s: &str) -> ParamPoint {
        ParamPoint::parse(s).unwrap()
    }

    fn key(i: &IdealGens) -> String {
        ideal_key(i).unwrap().to_string()
    }

    #[test]
    fn principal_values() {
        let f = parse_polynomial("x+y", &ring()).unwrap();
        assert_eq!(key(&tau_principal(&f, PAdicRational::new(1, 0, 3)).unwrap()), "x+y");
        let g = parse_polynomial("x*y", &ring()).unwrap();
        assert_eq!(key(&tau_principal(&g, PAdicRational::new(2, 1, 3)).unwrap()), "1");
        assert_eq!(key(&tau_principal(&g, PAdicRational::new(0, 4, 3)).unwrap()), "1");
    }

    #[test]
    fn staircase_points() {
        let cfg = TauConfig::default();
        let fam = staircase();
        assert_eq!(key(&tau_mixed(&fam, &pt("1/3,2/3"), &cfg).unwrap()), "x;y");
        assert_eq!(key(&tau_mixed(&fam, &pt("2/3,1/3"), &cfg).unwrap()), "1");
        assert_eq!(key(&tau_mixed(&fam, &pt("1,1"), &cfg).unwrap()), "x^2*y+x*y^2");
    }

    #[test]
    fn exact_and_window_agree() {
        let fam = staircase();
        let slow = TauConfig {
            skoda: false,
            exact_padic: false,
            ..TauConfig::default()
        };
        for s in ["1/3,2/3", "2/9,7/9", "1,1/3", "4/3,2/3", "0,1", "5/9,5/9"] {
            let a = tau_mixed(&fam, &pt(s), &TauConfig::default()).unwrap();
            let b = tau_mixed(&fam, &pt(s), &slow).unwrap();
            assert!(ideal_equal(&a, &b).unwrap(), "{s}");
        }
    }

    #[test]
    fn non_padic_points_stabilize() {
        // (x+y)^{1/2}: right-constancy gives R
        let fam = IdealFamily::parse(&ring(), &["x+y"]).unwrap();
        let t = tau_mixed(&fam, &pt("1/2"), &TauConfig::default()).unwrap();
        assert_eq!(key(&t), "1");
        let t = tau_mixed(&fam, &pt("3/2"), &TauConfig::default()).unwrap();
        assert_eq!(key(&t), "x+y");
    }

    #[test]
    fn maximal_ideal_powers() {
        // τ((x,y)^c) in two variables is (x,y)^{⌊c⌋ - 1} for c >= 1
        let fam = IdealFamily::parse(&ring(), &["x,y"]).unwrap();
        let cfg = TauConfig::default();
        assert_eq!(key(&tau_mixed(&fam, &pt("1"), &cfg).unwrap()), "1");
        assert_eq!(key(&tau_mixed(&fam, &pt("2"), &cfg).unwrap()), "x;y");
        assert_eq!(key(&tau_mixed(&fam, &pt("5/2"), &cfg).unwrap()), "x;y");
        assert_eq!(key(&tau_mixed(&fam, &pt("3"), &cfg).unwrap()), "x^2;x*y;y^2");
    }

    #[test]
    fn window_plateau() {
        // τ(a^{1/2}) = R for a = (x^2 y, y^3) in characteristic 2, but
        // J_1 = J_2 = (x, y) and only J_3 reaches R
        let r2 = Ring::new(2, &["x", "y"]).unwrap();
        let fam = IdealFamily::parse(&r2, &["x^2*y,y^3"]).unwrap();
        let window = TauConfig {
            exact_padic: false,
            ..TauConfig::default()
        };
        assert_eq!(key(&tau_mixed(&fam, &pt("1/2"), &window).unwrap()), "x;y");
        assert_eq!(key(&tau_mixed(&fam, &pt("1/2"), &TauConfig::default()).unwrap()), "1");
        assert_eq!(key(&tau_mixed(&fam, &pt("1"), &TauConfig::default()).unwrap()), "x*y;y^2");
        assert_eq!(key(&tau_mixed(&fam, &pt("2"), &TauConfig::default()).unwrap()), "x^3*y^2;x^2*y^3;x*y^4;y^5");
    }

    #[test]
    fn skoda_examples() {
        let fam = staircase();
        let (factor, res) = skoda_reduce(&fam, &pt("1,8/9")).unwrap();
        assert_eq!(factor.gens(), &[parse_polynomial("x+y", &ring()).unwrap()]);
        assert_eq!(res, pt("0,8/9"));
        let (factor, res) = skoda_reduce(&fam, &pt("1/3,2/3")).unwrap();
        assert!(factor.gens()[0].is_one());
        assert_eq!(res, pt("1/3,2/3"));
        let m = IdealFamily::parse(&ring(), &["x,y"]).unwrap();
        let (factor, res) = skoda_reduce(&m, &pt("3")).unwrap();
        assert!(ideal_equal(&factor, &IdealGens::parse("x^2,x*y,y^2", &ring()).unwrap()).unwrap());
        assert_eq!(res, pt("1"));
    }

    #[test]
    fn single_reduction() {
        let fam = staircase();
        let (j, _) = reduce_to_single(&fam, &[1, 2], &rat(1, 3)).unwrap();
        assert_eq!(j.gens(), &[parse_polynomial("x^3*y^2+x^2*y^3", &ring()).unwrap()]);
        let (j, _) = reduce_to_single(&fam, &[1, 0], &rat(1, 1)).unwrap();
        assert_eq!(j, fam.ideals()[0]);
        let (j, _) = reduce_to_single(&fam, &[1, 1], &rat(1, 1)).unwrap();
        assert_eq!(j.gens(), &[parse_polynomial("x^2*y+x*y^2", &ring()).unwrap()]);
        assert!(reduce_to_single(&fam, &[0, 0], &rat(1, 1)).is_err());
    }

    #[test]
    fn config_validation() {
        let bad = TauConfig {
            confirm_window: 0,
            ..TauConfig::default()
        };
        assert!(tau_mixed(&staircase(), &pt("1/2,1/2"), &bad).is_err());
        let tight = TauConfig {
            e_start: 1,
            e_max: 1,
            confirm_window: 3,
            exact_padic: false,
            ..TauConfig::default()
        };
        assert!(matches!(
            tau_mixed(&staircase(), &pt("1/3,2/3"), &tight),
            Err(Error::NotStabilized { e_max: 1 })
        ));
    }
}
