//! Built-in skew brace families. Every constructor routes its tables through
//! [`SkewBrace::verify`], so a catalog brace is verified at construction.
//!
//! Index conventions: product braces on Z/m x Z/k encode the pair (a1, a2)
//! as `a1 * k + a2`; symmetric groups index permutations by the
//! lexicographic rank of their one-line notation, so index 0 is the identity.

use crate::brace::{BraceError, SkewBrace};

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// All permutations of {0, ..., k-1} in lexicographic one-line order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    let mut used = vec![false; k];
    fn rec(k: usize, pos: usize, current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if pos == k {
            out.push(current.clone());
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                current[pos] = v;
                rec(k, pos + 1, current, used, out);
                used[v] = false;
            }
        }
    }
    rec(k, 0, &mut current, &mut used, &mut out);
    out
}

/// Lexicographic rank of a permutation in one-line notation.
pub fn perm_index(k: usize, perm: &[usize]) -> usize {
    permutations(k)
        .iter()
        .position(|p| p == perm)
        .expect("not a permutation")
}

/// Composition applying `tau` first: (sigma tau)(x) = sigma(tau(x)).
fn perm_mul(sigma: &[usize], tau: &[usize]) -> Vec<usize> {
    tau.iter().map(|&x| sigma[x]).collect()
}

fn sym_table(k: usize) -> Vec<Vec<usize>> {
    let perms = permutations(k);
    perms
        .iter()
        .map(|s| {
            perms
                .iter()
                .map(|t| {
                    let st = perm_mul(s, t);
                    perms.iter().position(|p| *p == st).unwrap()
                })
                .collect()
        })
        .collect()
}

fn group_table(name: &str, param: usize) -> Result<Vec<Vec<usize>>, BraceError> {
    match name {
        "cyclic" => {
            if param == 0 {
                return Err(BraceError::BadParams("cyclic group needs order >= 1".into()));
            }
            Ok(cyclic_table(param))
        }
        "sym" => {
            if param != 3 && param != 4 {
                return Err(BraceError::BadParams(format!(
                    "sym supports degrees 3 and 4, got {param}"
                )));
            }
            Ok(sym_table(param))
        }
        other => Err(BraceError::BadParams(format!("unknown group family {other}"))),
    }
}

/// The trivial brace (both operations equal) on a named group.
pub fn trivial(group: &str, param: usize) -> Result<SkewBrace, BraceError> {
    let t = group_table(group, param)?;
    SkewBrace::verify(&t, &t)
}

/// The almost trivial brace: circ is the opposite multiplication, so
/// lambda^op is the identity and lambda_a is conjugation by a.
pub fn almost_trivial(group: &str, param: usize) -> Result<SkewBrace, BraceError> {
    let t = group_table(group, param)?;
    let n = t.len();
    let opp: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| t[b][a]).collect()).collect();
    SkewBrace::verify(&t, &opp)
}

pub fn trivial_cyclic(n: usize) -> Result<SkewBrace, BraceError> {
    trivial("cyclic", n)
}

/// Brace on Z/p x Z/2 with componentwise addition and
/// (a1, a2) o (b1, b2) = (a1 + (-1)^a2 b1, a2 + b2), for odd primes p.
/// The circ group is dihedral of order 2p.
pub fn semidirect_p2(p: usize) -> Result<SkewBrace, BraceError> {
    if !is_prime(p) || p == 2 {
        return Err(BraceError::BadParams(format!("{p} is not an odd prime")));
    }
    let n = 2 * p;
    let idx = |a1: usize, a2: usize| a1 * 2 + a2;
    let mut dot = vec![vec![0; n]; n];
    let mut circ = vec![vec![0; n]; n];
    for a1 in 0..p {
        for a2 in 0..2 {
            for b1 in 0..p {
                for b2 in 0..2 {
                    dot[idx(a1, a2)][idx(b1, b2)] = idx((a1 + b1) % p, (a2 + b2) % 2);
                    let signed = if a2 == 0 { b1 } else { (p - b1) % p };
                    circ[idx(a1, a2)][idx(b1, b2)] = idx((a1 + signed) % p, (a2 + b2) % 2);
                }
            }
        }
    }
    SkewBrace::verify(&dot, &circ)
}

/// Brace on Z/p x Z/p with componentwise addition and
/// (a1, a2) o (b1, b2) = (a1 + b1 + a2 b2, a2 + b2). The circ group is
/// abelian: cyclic of order 4 when p = 2, elementary abelian for odd p.
pub fn unipotent_p2(p: usize) -> Result<SkewBrace, BraceError> {
    if !is_prime(p) {
        return Err(BraceError::BadParams(format!("{p} is not prime")));
    }
    let n = p * p;
    let idx = |a1: usize, a2: usize| a1 * p + a2;
    let mut dot = vec![vec![0; n]; n];
    let mut circ = vec![vec![0; n]; n];
    for a1 in 0..p {
        for a2 in 0..p {
            for b1 in 0..p {
                for b2 in 0..p {
                    dot[idx(a1, a2)][idx(b1, b2)] = idx((a1 + b1) % p, (a2 + b2) % p);
                    circ[idx(a1, a2)][idx(b1, b2)] =
                        idx((a1 + b1 + a2 * b2) % p, (a2 + b2) % p);
                }
            }
        }
    }
    SkewBrace::verify(&dot, &circ)
}

/// Brace of order q q' on Z/q x Z/q' with componentwise addition and
/// (a1, a2) o (b1, b2) = (a1 + lambda^a2 b1, a2 + b2), where lambda has
/// multiplicative order exactly q' mod q. The circ group is the nonabelian
/// group of order q q'.
pub fn qq_prime(q: usize, q_prime: usize, lambda: usize) -> Result<SkewBrace, BraceError> {
    if !is_prime(q) || !is_prime(q_prime) {
        return Err(BraceError::BadParams(format!(
            "{q} and {q_prime} must both be prime"
        )));
    }
    if lambda == 0 || lambda >= q {
        return Err(BraceError::BadParams(format!(
            "lambda = {lambda} is out of range for modulus {q}"
        )));
    }
    let mut order = 1;
    let mut pow = lambda % q;
    while pow != 1 {
        pow = pow * lambda % q;
        order += 1;
        if order > q {
            break;
        }
    }
    if order != q_prime {
        return Err(BraceError::BadParams(format!(
            "lambda = {lambda} has multiplicative order {order} mod {q}, expected {q_prime}"
        )));
    }
    let n = q * q_prime;
    let idx = |a1: usize, a2: usize| a1 * q_prime + a2;
    let lambda_pow = |e: usize| -> usize {
        let mut acc = 1usize;
        for _ in 0..e {
            acc = acc * lambda % q;
        }
        acc
    };
    let mut dot = vec![vec![0; n]; n];
    let mut circ = vec![vec![0; n]; n];
    for a1 in 0..q {
        for a2 in 0..q_prime {
            for b1 in 0..q {
                for b2 in 0..q_prime {
                    dot[idx(a1, a2)][idx(b1, b2)] =
                        idx((a1 + b1) % q, (a2 + b2) % q_prime);
                    circ[idx(a1, a2)][idx(b1, b2)] =
                        idx((a1 + lambda_pow(a2) * b1) % q, (a2 + b2) % q_prime);
                }
            }
        }
    }
    SkewBrace::verify(&dot, &circ)
}

/// Brace on S3 from its exact factorization S3 = <(1 2)> A3: writing
/// sigma = sigma1 sigma2 with sigma1 in <(1 2)> and sigma2 in A3, set
/// sigma o tau = sigma1 tau sigma2. The circ group is cyclic of order 6.
pub fn s3_factorization() -> Result<SkewBrace, BraceError> {
    let perms = permutations(3);
    let swap = vec![1usize, 0, 2];
    let is_even = |p: &[usize]| {
        let mut inversions = 0;
        for i in 0..p.len() {
            for j in (i + 1)..p.len() {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        inversions % 2 == 0
    };
    let dot = sym_table(3);
    let mut circ = vec![vec![0; 6]; 6];
    for (i, sigma) in perms.iter().enumerate() {
        let (s1, s2) = if is_even(sigma) {
            (vec![0, 1, 2], sigma.clone())
        } else {
            (swap.clone(), perm_mul(&swap, sigma))
        };
        for (j, tau) in perms.iter().enumerate() {
            let prod = perm_mul(&s1, &perm_mul(tau, &s2));
            circ[i][j] = perms.iter().position(|p| *p == prod).unwrap();
        }
    }
    SkewBrace::verify(&dot, &circ)
}

/// Parse a catalog specifier of the form `family:param:...`, e.g.
/// `trivial:sym:3`, `semidirect_p2:3`, `qq_prime:7:3:2`, `s3_factorization`.
pub fn from_spec(spec: &str) -> Result<SkewBrace, BraceError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let num = |s: &str| -> Result<usize, BraceError> {
        s.parse()
            .map_err(|_| BraceError::BadParams(format!("expected a number, got {s:?}")))
    };
    match parts.as_slice() {
        ["trivial", group, param] => trivial(group, num(param)?),
        ["almost_trivial", group, param] => almost_trivial(group, num(param)?),
        ["semidirect_p2", p] => semidirect_p2(num(p)?),
        ["unipotent_p2", p] => unipotent_p2(num(p)?),
        ["qq_prime", q, qp, lambda] => qq_prime(num(q)?, num(qp)?, num(lambda)?),
        ["s3_factorization"] => s3_factorization(),
        _ => Err(BraceError::BadParams(format!(
            "unrecognized catalog spec {spec:?}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_verify_and_have_expected_orders() {
        assert_eq!(trivial("cyclic", 6).unwrap().order(), 6);
        assert_eq!(trivial("sym", 3).unwrap().order(), 6);
        assert_eq!(trivial("sym", 4).unwrap().order(), 24);
        assert_eq!(almost_trivial("sym", 3).unwrap().order(), 6);
        assert_eq!(semidirect_p2(3).unwrap().order(), 6);
        assert_eq!(unipotent_p2(2).unwrap().order(), 4);
        assert_eq!(unipotent_p2(3).unwrap().order(), 9);
        assert_eq!(qq_prime(7, 3, 2).unwrap().order(), 21);
        assert_eq!(s3_factorization().unwrap().order(), 6);
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(semidirect_p2(4), Err(BraceError::BadParams(_))));
        assert!(matches!(semidirect_p2(2), Err(BraceError::BadParams(_))));
        assert!(matches!(unipotent_p2(6), Err(BraceError::BadParams(_))));
        // 4 has order 3 mod 7 as well (4 = 2^2), but 3 has order 6
        assert!(matches!(qq_prime(7, 3, 3), Err(BraceError::BadParams(_))));
        assert!(qq_prime(7, 3, 4).is_ok());
        assert!(matches!(trivial("sym", 5), Err(BraceError::BadParams(_))));
        assert!(matches!(from_spec("nope:1"), Err(BraceError::BadParams(_))));
    }

    #[test]
    fn almost_trivial_lambda_is_conjugation() {
        let b = almost_trivial("sym", 3).unwrap();
        for a in 0..6 {
            for x in 0..6 {
                assert_eq!(b.lambda_op(a, x), x);
                assert_eq!(
                    b.lambda(a, x),
                    b.dot(b.dot(b.dot_inv(a), x), a)
                );
            }
        }
    }

    #[test]
    fn semidirect_lambda_op_negates_first_coordinate() {
        let b = semidirect_p2(3).unwrap();
        // lambda^op_(0,1)((1,0)) = (-1, 0) = (2, 0); indices 1, 2, 4.
        assert_eq!(b.lambda_op(1, 2), 4);
        assert_eq!(b.lambda_op(0, 2), 2);
    }

    #[test]
    fn unipotent_circ_is_cyclic_for_p2() {
        let b = unipotent_p2(2).unwrap();
        // (1,1) has index 3 and generates (A, o): (1,1), (1,0), (0,1), (0,0).
        let g = 3;
        let mut x = g;
        let mut seen = vec![g];
        loop {
            x = b.circ(x, g);
            if seen.contains(&x) {
                break;
            }
            seen.push(x);
        }
        assert_eq!(seen.len(), 4);
    }

    #[test]
    fn s3_factorization_circ_group_is_abelian() {
        let b = s3_factorization().unwrap();
        for a in 0..6 {
            for c in 0..6 {
                assert_eq!(b.circ(a, c), b.circ(c, a));
            }
        }
        assert!(!b.is_trivial());
    }

    #[test]
    fn qq_prime_lambda_op_scales() {
        let b = qq_prime(7, 3, 2).unwrap();
        // lambda^op_(0,1)((1,0)) = (2, 0): indices (0,1) = 1, (1,0) = 3, (2,0) = 6.
        assert_eq!(b.lambda_op(1, 3), 6);
    }

    #[test]
    fn spec_round_trip() {
        assert_eq!(from_spec("trivial:cyclic:4").unwrap().order(), 4);
        assert_eq!(from_spec("qq_prime:7:3:2").unwrap().order(), 21);
        assert_eq!(from_spec("s3_factorization").unwrap().order(), 6);
    }
}
