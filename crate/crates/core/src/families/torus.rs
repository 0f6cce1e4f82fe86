use super::FamilyError;
use crate::{BraidWord, Letter};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// `(σ₁σ₂⋯σ_{q−1})^p` on `q` strands; its closure is the torus knot `T(p, q)`.
pub fn torus_braid(p: i64, q: i64) -> Result<BraidWord, FamilyError> {
    if p < 2 || q < 2 {
        return Err(FamilyError::TorusRange(p, q));
    }
    if gcd(p, q) != 1 {
        return Err(FamilyError::NotCoprime(p, q));
    }
    let strands = q as usize;
    let cycle = BraidWord::new(strands, (1..strands).map(Letter::positive).collect())
        .expect("indices are in range");
    Ok(cycle.power(p as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let w = torus_braid(2, 3).unwrap();
        assert_eq!(w.to_string(), "B3: 1 2 1 2");
        assert_eq!((w.exponent_sum(), w.closure_components().components), (4, 1));
        assert_eq!(torus_braid(3, 2).unwrap().to_string(), "B2: 1 1 1");
        assert_eq!(torus_braid(5, 3).unwrap().exponent_sum(), 10);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(torus_braid(2, 4), Err(FamilyError::NotCoprime(2, 4)));
        assert_eq!(torus_braid(1, 3), Err(FamilyError::TorusRange(1, 3)));
    }
}
