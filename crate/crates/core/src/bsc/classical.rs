//! Sphere-packing, random-coding, expurgation and low-rate union exponents.

use crate::entropy::{divergence, gv_distance, h_clamped, ChannelBsc};
use crate::error::{Error, Result};
use crate::lp::delta_bar;
use crate::numerics::Search;
use crate::real::Real;

pub(crate) fn check_window<T: Real>(rate: T, hi: T, domain: &'static str) -> Result<T> {
    let slack = T::lit(T::CLAMP_EPS);
    if rate >= T::zero() && rate <= hi + slack {
        Ok(rate.min(hi))
    } else {
        Err(Error::domain("rate", rate, domain))
    }
}

/// Sphere-packing exponent `D(h^{-1}(1-R) || p)`, for `0 <= R <= 1 - h(p)`.
pub fn sphere_packing<T: Real>(rate: T, ch: &ChannelBsc<T>) -> Result<T> {
    let rate = check_window(rate, ch.capacity(), "[0, 1 - h(p)]")?;
    let d = gv_distance(rate)?.max(ch.p());
    divergence(d, ch.p())
}

/// Random-coding exponent `D(rho || p) + R_crit - R`, for `0 <= R <= R_crit`.
pub fn random_coding<T: Real>(rate: T, ch: &ChannelBsc<T>) -> Result<T> {
    let rate = check_window(rate, ch.r_crit(), "[0, R_crit]")?;
    Ok(divergence(ch.rho(), ch.p())? + ch.r_crit() - rate)
}

/// Expurgation exponent `-A(h^{-1}(1-R))`, for `0 <= R <= R_x`.
pub fn expurgation<T: Real>(rate: T, ch: &ChannelBsc<T>) -> Result<T> {
    let rate = check_window(rate, ch.r_x(), "[0, R_x]")?;
    Ok(-ch.a(gv_distance(rate)?))
}

/// Union bound over the codewords nearest to the transmitted one:
/// `-A(d) - R + 1 - h(d)` with `d` the linear-programming distance bound.
///
/// It bounds the reliability function only below the threshold rate returned
/// by [`find_r0_star`](super::find_r0_star); the caller checks the window.
pub fn union_bound_low_rate<T: Real>(rate: T, ch: &ChannelBsc<T>, search: Search<T>) -> Result<T> {
    let d = delta_bar(rate, search)?.delta_bar;
    Ok(-ch.a(d) - rate + T::one() - h_clamped(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropy::divergence;

    fn ch(p: f64) -> ChannelBsc<f64> {
        ChannelBsc::new(p).unwrap()
    }

    #[test]
    fn sphere_packing_values() {
        let c = ch(0.01);
        assert!(sphere_packing(c.capacity(), &c).unwrap().abs() < 1e-9);
        let at_crit = sphere_packing(c.r_crit(), &c).unwrap();
        assert!((at_crit - 0.17905).abs() < 1e-4);
        let expected = 0.5 * 50f64.log2() + 0.5 * (0.5f64 / 0.99).log2();
        assert!((sphere_packing(0.0, &c).unwrap() - expected).abs() < 1e-12);
        assert!((expected - 2.329_178).abs() < 1e-6);
        assert!(sphere_packing(c.capacity() + 1e-3, &c).is_err());
        assert!(sphere_packing(-0.1, &c).is_err());
    }

    #[test]
    fn random_coding_values() {
        let c = ch(0.01);
        let closed = |r: f64| 1.0 - r - (1.0 + c.u()).log2();
        for r in [0.0, 0.2, 0.537, c.r_crit()] {
            assert!((random_coding(r, &c).unwrap() - closed(r)).abs() < 1e-9);
        }
        assert!((random_coding(0.537, &c).unwrap() - 0.2011).abs() < 1e-3);
        let d = random_coding(0.3, &c).unwrap() - random_coding(0.31, &c).unwrap();
        assert!((d - 0.01).abs() < 1e-14);
        assert!(random_coding(c.r_crit() + 1e-3, &c).is_err());
    }

    #[test]
    fn classical_bounds_meet_at_their_ends() {
        for p in [0.01, 0.05, 0.08, 0.2] {
            let c = ch(p);
            let sp = sphere_packing(c.r_crit(), &c).unwrap();
            let e0 = random_coding(c.r_crit(), &c).unwrap();
            let d = divergence(c.rho(), p).unwrap();
            assert!((sp - d).abs() < 1e-9 && (e0 - d).abs() < 1e-9, "p = {p}");
            let ex = expurgation(c.r_x(), &c).unwrap();
            let e0x = random_coding(c.r_x(), &c).unwrap();
            assert!((ex - e0x).abs() < 1e-6, "p = {p}");
        }
    }

    #[test]
    fn expurgation_values() {
        let c = ch(0.01);
        assert!((expurgation(0.0, &c).unwrap() - 1.164_589).abs() < 1e-5);
        let mut prev = f64::INFINITY;
        for i in 0..=50 {
            let r = c.r_x() * i as f64 / 50.0;
            let e = expurgation(r, &c).unwrap();
            assert!(e < prev);
            prev = e;
        }
        assert!(expurgation(c.r_x() + 1e-3, &c).is_err());
    }

    #[test]
    fn union_bound_values() {
        let c = ch(0.01);
        let s = Search::default();
        let near_zero = union_bound_low_rate(1e-9, &c, s).unwrap();
        assert!((near_zero + c.a(0.5)).abs() < 1e-3);
        let r1 = 0.537;
        let e0 = random_coding(r1, &c).unwrap();
        assert!((union_bound_low_rate(r1, &c, s).unwrap() - e0).abs() < 2e-3);
        for i in 1..50 {
            let r = i as f64 / 100.0;
            let d = delta_bar(r, s).unwrap().delta_bar;
            if 1.0 - h_clamped(d) >= r {
                assert!(union_bound_low_rate(r, &c, s).unwrap() <= -c.a(d) + 1e-12);
            }
        }
    }
}
