use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::MultiPoly;
use crate::error::Error;

impl FromStr for MultiPoly {
    type Err = Error;

    /// Sums of terms like `3*x1^2*x2`, `-x3`, `1/2`. The variable count is the
    /// largest index that occurs.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |why: &str| Error::Parse(format!("{why} in polynomial {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty input"));
        }
        let mut terms: Vec<(Vec<(usize, u32)>, BigRational)> = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let mut sign = BigRational::one();
            if let Some(r) = rest.strip_prefix('+') {
                rest = r;
            } else if let Some(r) = rest.strip_prefix('-') {
                sign = -sign;
                rest = r;
            } else if !terms.is_empty() {
                return Err(bad("missing operator"));
            }
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            rest = tail;
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let mut coeff = sign;
            let mut vars = Vec::new();
            for factor in term.split('*') {
                if let Some(v) = factor.strip_prefix('x') {
                    let (idx, exp) = match v.split_once('^') {
                        Some((i, e)) => (i, e.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                        None => (v, 1),
                    };
                    let idx: usize = idx.parse().map_err(|_| bad("bad variable index"))?;
                    if idx == 0 {
                        return Err(bad("variables start at x1"));
                    }
                    vars.push((idx, exp));
                } else {
                    let c = match factor.split_once('/') {
                        Some((p, q)) => {
                            let p: BigInt = p.parse().map_err(|_| bad("bad coefficient"))?;
                            let q: BigInt = q.parse().map_err(|_| bad("bad coefficient"))?;
                            if q == BigInt::from(0) {
                                return Err(bad("zero denominator"));
                            }
                            BigRational::new(p, q)
                        }
                        None => BigRational::from_integer(factor.parse().map_err(|_| bad("bad coefficient"))?),
                    };
                    coeff *= c;
                }
            }
            terms.push((vars, coeff));
        }
        let n = terms.iter().flat_map(|(v, _)| v.iter().map(|&(i, _)| i)).max().unwrap_or(1);
        let mut out = MultiPoly::zero(n);
        for (vars, c) in terms {
            let mut e = vec![0u32; n];
            for (i, a) in vars {
                e[i - 1] += a;
            }
            out.add_term(e, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses() {
        let p: MultiPoly = "x1^2*x2 - 3*x3 + 1/2".parse().unwrap();
        assert_eq!(p.nvars(), 3);
        assert_eq!(p.to_string(), "x1^2*x2 - 3*x3 + 1/2");
        let q: MultiPoly = "x1 + x2 + x1".parse().unwrap();
        assert_eq!(q.to_string(), "2*x1 + x2");
        assert_eq!("-x1*x1".parse::<MultiPoly>().unwrap().to_string(), "-x1^2");
        for bad in ["", "x0", "x1^", "2x1", "x1+", "1/0", "y1"] {
            assert!(bad.parse::<MultiPoly>().is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trip() {
        let p = MultiPoly::from_int_terms(3, [(vec![2, 0, 1], -4), (vec![0, 1, 0], 1), (vec![0, 0, 0], 7)]);
        let back: MultiPoly = p.to_string().parse().unwrap();
        assert_eq!(back, p);
    }
}
