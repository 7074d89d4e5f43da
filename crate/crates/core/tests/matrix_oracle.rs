//! Checks the char-2 commutator table of type C against explicit upper
//! unitriangular symplectic matrices over GF(2^f).

use quattern::{Collector, CommutatorTable, Elem, FieldCtx, RootSystem, RootType};
use rand::{Rng, SeedableRng};

type Mat = Vec<Vec<Elem>>;

fn identity(d: usize) -> Mat {
    (0..d).map(|i| (0..d).map(|j| (i == j) as Elem).collect()).collect()
}

fn mat_mul(ctx: &FieldCtx, a: &Mat, b: &Mat) -> Mat {
    let d = a.len();
    let mut c = vec![vec![0; d]; d];
    for i in 0..d {
        for k in 0..d {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..d {
                c[i][j] ^= ctx.mul(a[i][k], b[k][j]);
            }
        }
    }
    c
}

/// Matrix positions touched by the root element of a C_n root given in
/// simple-root coordinates (α_n = 2e_n long).
fn root_positions(n: usize, coeffs: &[i32]) -> Vec<(usize, usize)> {
    // Convert to the e-basis: α_k = e_k − e_{k+1} (k < n), α_n = 2e_n.
    let mut e = vec![0i32; n];
    for k in 0..n {
        let c = coeffs[k];
        if k + 1 < n {
            e[k] += c;
            e[k + 1] -= c;
        } else {
            e[k] += 2 * c;
        }
    }
    let pos = |i: usize| i; // e_i ↦ row i
    let neg = |i: usize| 2 * n - 1 - i; // −e_i ↦ row 2n−1−i
    let nz: Vec<(usize, i32)> = e.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect();
    match nz.as_slice() {
        [(i, 2)] => vec![(pos(*i), neg(*i))],
        [(i, 1), (j, -1)] => vec![(pos(*i), pos(*j)), (neg(*j), neg(*i))],
        [(i, 1), (j, 1)] => vec![(pos(*i), neg(*j)), (pos(*j), neg(*i))],
        other => panic!("not a positive C root: {other:?}"),
    }
}

fn root_matrix(n: usize, coeffs: &[i32], t: Elem) -> Mat {
    let mut m = identity(2 * n);
    for (r, c) in root_positions(n, coeffs) {
        m[r][c] ^= t;
    }
    m
}

fn to_matrix(ctx: &FieldCtx, rs: &RootSystem, v: &[Elem]) -> Mat {
    let n = rs.rank;
    let mut m = identity(2 * n);
    for (k, &t) in v.iter().enumerate() {
        if t != 0 {
            m = mat_mul(ctx, &m, &root_matrix(n, &rs.roots[k].coeffs, t));
        }
    }
    m
}

#[test]
fn type_c_relations_match_symplectic_matrices() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(3);
    for n in [2, 3, 4] {
        let rs = RootSystem::build(RootType::C, n).unwrap();
        let tab = CommutatorTable::build(&rs, 2).unwrap();
        for f in [1, 2, 3] {
            let ctx = FieldCtx::new(f).unwrap();
            let col = Collector::new(&tab, &ctx).unwrap();
            let q = ctx.q();
            // Root elements really are symplectic-unipotent and the map is a homomorphism.
            for i in 0..rs.len() {
                for j in 0..rs.len() {
                    if i == j {
                        continue;
                    }
                    for _ in 0..4 {
                        let (t, s) = (rng.gen_range(1..q), rng.gen_range(1..q));
                        let xi = root_matrix(n, &rs.roots[i].coeffs, t);
                        let xj = root_matrix(n, &rs.roots[j].coeffs, s);
                        // In characteristic 2 each root element is an involution.
                        let comm = mat_mul(&ctx, &mat_mul(&ctx, &mat_mul(&ctx, &xi, &xj), &xi), &xj);
                        let ours = col.commutator(i, t, j, s);
                        assert_eq!(to_matrix(&ctx, &rs, &ours), comm, "C{n} f={f} pair ({}, {})", i + 1, j + 1);
                    }
                }
            }
            for _ in 0..50 {
                let u: Vec<Elem> = (0..rs.len()).map(|_| rng.gen_range(0..q)).collect();
                let v: Vec<Elem> = (0..rs.len()).map(|_| rng.gen_range(0..q)).collect();
                let uv = col.mul(&u, &v);
                assert_eq!(
                    to_matrix(&ctx, &rs, &uv),
                    mat_mul(&ctx, &to_matrix(&ctx, &rs, &u), &to_matrix(&ctx, &rs, &v))
                );
            }
        }
    }
}
