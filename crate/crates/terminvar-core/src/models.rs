//! Abelian-surface models carrying the finite symplectic actions.
//!
//! Each model fixes a rank-4 lattice basis for a product abelian surface and
//! records, for a small set of named linear generators, both the integer
//! matrix on the lattice and the complex `2 x 2` matrix on the tangent space
//! `V = C^2`.  The two are tied together by the embedding matrix `E`
//! (columns = complex images of the lattice basis): every generator must
//! satisfy the intertwining relation `M_C * E = E * M_Z`, which is checked
//! at construction time.
//!
//! The four models are:
//!
//! * `e2-i` — `E_i x E_i` with `E_i = C / (Z + iZ)`, basis `(1, i)` per
//!   factor.  Carries `-id`, the order-4 action `g4 = (i, -i)` and the
//!   symplectic swap `h`.
//! * `e2-zeta3` — `E_w x E_w` with `w = zeta_3`, basis `(1, w)` per factor.
//!   Carries the order-3 action `g3 = (w, w^2)`.
//! * `e2-zeta6` — the same surface with basis `(1, zeta_6)` per factor.
//!   Carries the order-6 action `g6 = (zeta_6, zeta_6^{-1})` and the swap
//!   `h`; together they generate a binary dihedral group of order 12.
//! * `quaternionic` — `H / Gamma` for the Hurwitz order `Gamma` with basis
//!   `(1, i, j, t)`, `t = (1+i+j+k)/2`.  Left multiplications `li`, `lj`,
//!   `lk`, `lw` (by `i`, `j`, `k`, `t`) are complex-linear for the right
//!   `i`-multiplication structure; `li, lj` generate the quaternion group
//!   and `li, lw` the binary tetrahedral group of order 24.

use std::collections::BTreeMap;

use num_traits::One;

use crate::algebra::cyclotomic::CycNumber;
use crate::algebra::matrix::Matrix;
use crate::{int, CMat, EngineError, IMat, Rat, Result};

/// A named linear generator of a model: the lattice matrix together with its
/// complex realization on the tangent space.
#[derive(Clone, Debug)]
pub struct LinearGen {
    /// Action on the lattice `Z^4` (columns are images of basis vectors).
    pub imat: IMat,
    /// Action on `V = C^2` over `Q(zeta_12)`.
    pub cmat: CMat,
}

/// A torus model: a basis convention plus its catalogue of named generators.
#[derive(Clone, Debug)]
pub struct TorusModel {
    /// Stable model identifier (`e2-i`, `e2-zeta3`, `e2-zeta6`,
    /// `quaternionic`).
    pub name: &'static str,
    /// Named linear generators.
    pub symbols: BTreeMap<&'static str, LinearGen>,
    /// The `2 x 4` embedding matrix sending lattice coordinates to `C^2`.
    pub embedding: CMat,
}

impl TorusModel {
    /// Looks up a model by name.
    pub fn by_name(name: &str) -> Result<TorusModel> {
        let m = match name {
            "e2-i" => model_e2_i(),
            "e2-zeta3" => model_e2_zeta3(),
            "e2-zeta6" => model_e2_zeta6(),
            "quaternionic" => model_quaternionic(),
            other => {
                return Err(EngineError::BadSpec(format!(
                    "unknown torus model `{other}` (expected e2-i, e2-zeta3, e2-zeta6 or quaternionic)"
                )))
            }
        };
        m.validate()?;
        Ok(m)
    }

    /// All four models.
    pub fn all() -> Vec<TorusModel> {
        ["e2-i", "e2-zeta3", "e2-zeta6", "quaternionic"]
            .iter()
            .map(|n| TorusModel::by_name(n).expect("built-in model"))
            .collect()
    }

    /// Resolves a `*`-separated word in the model's symbols to a single
    /// linear generator (left-to-right composition).
    pub fn linear_word(&self, word: &str) -> Result<LinearGen> {
        let mut imat: IMat = Matrix::identity(4);
        let mut cmat: CMat = Matrix::identity(2);
        for part in word.split('*') {
            let key = part.trim();
            let gen = self.symbols.get(key).ok_or_else(|| {
                EngineError::BadSpec(format!(
                    "model `{}` has no linear symbol `{key}`",
                    self.name
                ))
            })?;
            imat = imat.mul(&gen.imat);
            cmat = cmat.mul(&gen.cmat);
        }
        Ok(LinearGen { imat, cmat })
    }

    /// Checks the intertwining relation `M_C * E = E * M_Z` and
    /// unimodularity for every symbol.
    fn validate(&self) -> Result<()> {
        for (name, gen) in &self.symbols {
            let lhs = gen.cmat.mul(&self.embedding);
            let rhs = self.embedding.mul(&to_cyc(&gen.imat));
            if lhs != rhs {
                return Err(EngineError::Inconsistency(format!(
                    "model `{}`: symbol `{name}` does not intertwine with the embedding",
                    self.name
                )));
            }
            let det = gen.imat.det();
            if det != int(1) {
                return Err(EngineError::Inconsistency(format!(
                    "model `{}`: symbol `{name}` has lattice determinant {det}, expected 1",
                    self.name
                )));
            }
            if gen.cmat.det() != CycNumber::one() {
                return Err(EngineError::Inconsistency(format!(
                    "model `{}`: symbol `{name}` is not symplectic on V",
                    self.name
                )));
            }
        }
        Ok(())
    }
}

/// Converts an integer matrix to a cyclotomic one entrywise.
pub fn to_cyc(m: &IMat) -> CMat {
    m.map(|e| CycNumber::from_rat(Rat::from_integer(e.clone())))
}

// ---------------------------------------------------------------------------
// Construction helpers
// ---------------------------------------------------------------------------

/// Integer matrix from columns (images of basis vectors).
fn imat_cols(cols: [[i64; 4]; 4]) -> IMat {
    Matrix::from_rows(
        (0..4)
            .map(|r| (0..4).map(|c| int(cols[c][r])).collect())
            .collect(),
    )
}

fn neg_identity4() -> IMat {
    let m: IMat = Matrix::identity(4);
    m.neg()
}

/// Cyclotomic scalar shorthand.
fn cy(n: i64) -> CycNumber {
    CycNumber::from_i64(n)
}

fn cmat2(rows: [[CycNumber; 2]; 2]) -> CMat {
    Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect())
}

fn neg_id_gen() -> LinearGen {
    LinearGen {
        imat: neg_identity4(),
        cmat: cmat2([[cy(-1), cy(0)], [cy(0), cy(-1)]]),
    }
}

// ---------------------------------------------------------------------------
// The four models
// ---------------------------------------------------------------------------

fn model_e2_i() -> TorusModel {
    let i = CycNumber::i();
    let embedding = cmat2_wide([
        [cy(1), i.clone(), cy(0), cy(0)],
        [cy(0), cy(0), cy(1), i.clone()],
    ]);
    let mut symbols = BTreeMap::new();
    symbols.insert("neg_id", neg_id_gen());
    // Multiplication by (i, -i): order 4, symplectic.
    symbols.insert(
        "g4",
        LinearGen {
            imat: imat_cols([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]),
            cmat: cmat2([[i.clone(), cy(0)], [cy(0), -i.clone()]]),
        },
    );
    // The symplectic swap (x, y) -> (-y, x).
    symbols.insert(
        "h",
        LinearGen {
            imat: imat_cols([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]),
            cmat: cmat2([[cy(0), cy(-1)], [cy(1), cy(0)]]),
        },
    );
    TorusModel {
        name: "e2-i",
        symbols,
        embedding,
    }
}

fn model_e2_zeta3() -> TorusModel {
    let w = CycNumber::zeta3();
    let embedding = cmat2_wide([
        [cy(1), w.clone(), cy(0), cy(0)],
        [cy(0), cy(0), cy(1), w.clone()],
    ]);
    let mut symbols = BTreeMap::new();
    symbols.insert("neg_id", neg_id_gen());
    // Multiplication by (w, w^2): order 3, symplectic.
    symbols.insert(
        "g3",
        LinearGen {
            imat: imat_cols([[0, 1, 0, 0], [-1, -1, 0, 0], [0, 0, -1, -1], [0, 0, 1, 0]]),
            cmat: cmat2([[w.clone(), cy(0)], [cy(0), w.pow(2)]]),
        },
    );
    TorusModel {
        name: "e2-zeta3",
        symbols,
        embedding,
    }
}

fn model_e2_zeta6() -> TorusModel {
    let s = CycNumber::zeta6();
    let embedding = cmat2_wide([
        [cy(1), s.clone(), cy(0), cy(0)],
        [cy(0), cy(0), cy(1), s.clone()],
    ]);
    let mut symbols = BTreeMap::new();
    symbols.insert("neg_id", neg_id_gen());
    // Multiplication by (zeta_6, zeta_6^{-1}): order 6, symplectic.
    symbols.insert(
        "g6",
        LinearGen {
            imat: imat_cols([[0, 1, 0, 0], [-1, 1, 0, 0], [0, 0, 1, -1], [0, 0, 1, 0]]),
            cmat: cmat2([
                [s.clone(), cy(0)],
                [cy(0), cy(1) - s.clone()],
            ]),
        },
    );
    // The symplectic swap (x, y) -> (-y, x); together with g6 it generates
    // a binary dihedral group of order 12.
    symbols.insert(
        "h",
        LinearGen {
            imat: imat_cols([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]),
            cmat: cmat2([[cy(0), cy(-1)], [cy(1), cy(0)]]),
        },
    );
    TorusModel {
        name: "e2-zeta6",
        symbols,
        embedding,
    }
}

fn model_quaternionic() -> TorusModel {
    let i = CycNumber::i();
    let half = CycNumber::from_rat(crate::rat(1, 2));
    // Basis (1, i, j, t) with t = (1+i+j+k)/2; the embedding sends
    // a + bi + cj + dk to (a + bi, c - di).
    let embedding = cmat2_wide([
        [
            cy(1),
            i.clone(),
            cy(0),
            half.clone() * (cy(1) + i.clone()),
        ],
        [
            cy(0),
            cy(0),
            cy(1),
            half.clone() * (cy(1) - i.clone()),
        ],
    ]);
    let mut symbols = BTreeMap::new();
    symbols.insert("neg_id", neg_id_gen());
    // Left multiplication by i: diag(i, -i) on V.
    symbols.insert(
        "li",
        LinearGen {
            imat: imat_cols([[0, 1, 0, 0], [-1, 0, 0, 0], [-1, -1, -1, 2], [-1, 0, -1, 1]]),
            cmat: cmat2([[i.clone(), cy(0)], [cy(0), -i.clone()]]),
        },
    );
    // Left multiplication by j: the symplectic swap on V.
    symbols.insert(
        "lj",
        LinearGen {
            imat: imat_cols([[0, 0, 1, 0], [1, 1, 1, -2], [-1, 0, 0, 0], [0, 1, 1, -1]]),
            cmat: cmat2([[cy(0), cy(-1)], [cy(1), cy(0)]]),
        },
    );
    // Left multiplication by k = ij.
    symbols.insert(
        "lk",
        LinearGen {
            imat: imat_cols([[-1, -1, -1, 2], [0, 0, 1, 0], [0, -1, 0, 0], [-1, -1, 0, 1]]),
            cmat: cmat2([[cy(0), -i.clone()], [-i.clone(), cy(0)]]),
        },
    );
    // Left multiplication by the order-6 unit t = (1+i+j+k)/2.
    symbols.insert(
        "lw",
        LinearGen {
            imat: imat_cols([[0, 0, 0, 1], [0, 1, 1, -1], [-1, -1, 0, 1], [-1, 0, 0, 1]]),
            cmat: cmat2([
                [
                    half.clone() * (cy(1) + i.clone()),
                    half.clone() * (cy(-1) - i.clone()),
                ],
                [
                    half.clone() * (cy(1) - i.clone()),
                    half.clone() * (cy(1) - i.clone()),
                ],
            ]),
        },
    );
    TorusModel {
        name: "quaternionic",
        symbols,
        embedding,
    }
}

fn cmat2_wide(rows: [[CycNumber; 4]; 2]) -> CMat {
    Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn all_models_validate() {
        for m in TorusModel::all() {
            // `by_name` runs `validate`; re-check the intertwining relation
            // explicitly so a regression in `validate` itself is caught.
            for (name, gen) in &m.symbols {
                assert_eq!(
                    gen.cmat.mul(&m.embedding),
                    m.embedding.mul(&to_cyc(&gen.imat)),
                    "symbol {name} of {}",
                    m.name
                );
            }
        }
    }

    fn order_of(m: &IMat) -> u32 {
        let id: IMat = Matrix::identity(4);
        let mut p = m.clone();
        for k in 1..=24 {
            if p == id {
                return k;
            }
            p = p.mul(m);
        }
        panic!("order > 24");
    }

    #[test]
    fn generator_orders_and_relations() {
        let ei = TorusModel::by_name("e2-i").unwrap();
        let g4 = &ei.symbols["g4"].imat;
        assert_eq!(order_of(g4), 4);
        assert_eq!(g4.mul(g4), neg_identity4());

        let ez3 = TorusModel::by_name("e2-zeta3").unwrap();
        let g3 = &ez3.symbols["g3"].imat;
        assert_eq!(order_of(g3), 3);
        // M^2 + M + I = 0.
        let sum = g3.mul(g3).add(g3).add(&Matrix::identity(4));
        assert_eq!(sum, Matrix::zero(4, 4));

        let ez6 = TorusModel::by_name("e2-zeta6").unwrap();
        let g6 = &ez6.symbols["g6"].imat;
        let h = &ez6.symbols["h"].imat;
        assert_eq!(order_of(g6), 6);
        assert_eq!(order_of(h), 4);
        assert_eq!(g6.mul(g6).mul(g6), neg_identity4());
        assert_eq!(h.mul(h), neg_identity4());
        // h g6 h^{-1} = g6^{-1}: equivalently h g6 h^{-1} g6 = id.
        let hinv = h.mul(h).mul(h); // h^3 = h^{-1} since h^4 = id
        assert_eq!(h.mul(g6).mul(&hinv).mul(g6), Matrix::identity(4));
        // g6^2 realizes the order-3 action in the zeta_6 basis.
        assert_eq!(order_of(&g6.mul(g6)), 3);

        let q = TorusModel::by_name("quaternionic").unwrap();
        let li = &q.symbols["li"].imat;
        let lj = &q.symbols["lj"].imat;
        let lk = &q.symbols["lk"].imat;
        let lw = &q.symbols["lw"].imat;
        assert_eq!(order_of(li), 4);
        assert_eq!(order_of(lj), 4);
        assert_eq!(order_of(lw), 6);
        assert_eq!(li.mul(li), neg_identity4());
        assert_eq!(li.mul(lj), lk.clone());
        assert_eq!(lj.mul(li), lk.clone().neg());
        // w i w^{-1} = j for the order-6 unit w.
        let lw_inv = lw.pow(5);
        assert_eq!(lw.mul(li).mul(&lw_inv), lj.clone());
        // w = (1 + i + j + k) / 2, so 2w - 1 - i - j = k on the lattice.
        let two_w = lw.add(lw);
        let id: IMat = Matrix::identity(4);
        assert_eq!(two_w.sub(&id).sub(li).sub(lj), lk.clone());
    }

    fn closure_size(gens: &[&IMat]) -> usize {
        let mut seen: BTreeSet<IMat> = BTreeSet::new();
        let id: IMat = Matrix::identity(4);
        seen.insert(id);
        let mut frontier: Vec<IMat> = vec![Matrix::identity(4)];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = x.mul(g);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn closure_sizes() {
        let ei = TorusModel::by_name("e2-i").unwrap();
        assert_eq!(closure_size(&[&ei.symbols["g4"].imat]), 4);
        let ez6 = TorusModel::by_name("e2-zeta6").unwrap();
        assert_eq!(
            closure_size(&[&ez6.symbols["g6"].imat, &ez6.symbols["h"].imat]),
            12
        );
        let q = TorusModel::by_name("quaternionic").unwrap();
        assert_eq!(closure_size(&[&q.symbols["li"].imat, &q.symbols["lj"].imat]), 8);
        assert_eq!(closure_size(&[&q.symbols["li"].imat, &q.symbols["lw"].imat]), 24);
        // The binary dihedral group is not a subgroup of the binary
        // tetrahedral one; its home is the zeta_6 model.
        assert_eq!(
            closure_size(&[
                &q.symbols["li"].imat,
                &q.symbols["lj"].imat,
                &q.symbols["lw"].imat
            ]),
            24
        );
    }

    #[test]
    fn linear_words() {
        let q = TorusModel::by_name("quaternionic").unwrap();
        let w = q.linear_word("li*lj").unwrap();
        assert_eq!(w.imat, q.symbols["lk"].imat);
        assert_eq!(w.cmat, q.symbols["lk"].cmat);
        assert!(q.linear_word("nope").is_err());
        let e = q.linear_word("li*li*li*li").unwrap();
        assert!(e.imat.is_identity());
    }

    #[test]
    fn unknown_model_errors() {
        assert!(TorusModel::by_name("e3-i").is_err());
    }
}
