//! Factorial and characteristic ideals in factored form.

use num_bigint::BigInt;

use super::w::w_u64;
use crate::arith::int::is_prime_power;
use crate::domain::{DomainSpec, FactoredIdeal};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealReport {
    pub n: u64,
    /// The characteristic ideal, the inverse of `n!_D`.
    pub characteristic: FactoredIdeal,
    pub factorial: FactoredIdeal,
}

/// `n!_D`, assembled prime by prime and, independently, as
/// `prod_{q <= n} Pi_q^{w_q(n)}`; the two must agree.
pub fn ideal_report(spec: &DomainSpec, n: u64) -> Result<IdealReport> {
    let mut by_primes = FactoredIdeal::unit(spec);
    let mut by_pi = FactoredIdeal::unit(spec);
    if n >= 2 {
        for p in spec.primes_of_norm_at_most(n) {
            let e = BigInt::from(w_u64(p.norm_u64(), n));
            by_primes = by_primes.mul(&FactoredIdeal::prime_pow(p, e));
        }
        for q in (2..=n).filter(|&q| is_prime_power(q)) {
            by_pi = by_pi.mul(&spec.pi_ideal(q).pow(&BigInt::from(w_u64(q, n))));
        }
    }
    if by_primes != by_pi {
        return Err(Error::Internal(format!("{n}!_D over {spec}: {by_primes} prime-wise but {by_pi} from Pi_q")));
    }
    Ok(IdealReport { n, characteristic: by_primes.inverse(), factorial: by_primes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let r = ideal_report(&DomainSpec::Integers, 6).unwrap();
        assert_eq!(r.factorial.to_string(), "(2)^4*(3)^2*(5)");
        assert_eq!(r.characteristic.inverse(), r.factorial);
        let f = ideal_report(&DomainSpec::FiniteFieldPolyRing(2), 4).unwrap();
        assert_eq!(f.factorial.to_string(), "(T)^3*(T+1)^3*(T^2+T+1)");
        for n in [0, 1] {
            assert!(ideal_report(&DomainSpec::ImagQuadraticOrder((-5).into()), n).unwrap().factorial.is_unit());
        }
    }
}
