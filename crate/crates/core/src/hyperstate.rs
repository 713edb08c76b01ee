//! Dense state vectors for hypergraph states.
//!
//! Qubit `i` (0-based) is bit `n − 1 − i` of the basis index, so the first
//! qubit is the most significant bit and bitstrings read left to right in
//! qubit order.

use num_complex::Complex;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::partition::PartitionEnsemble;
use crate::scalar::{abs, Real, Scalar};

pub const MAX_QUBITS: usize = 20;

/// Below this many amplitudes gates run serially.
const PARALLEL_THRESHOLD: usize = 1 << 14;

/// `2^{−n/2}`, exact for even `n` and correctly rounded for odd `n`.
fn uniform_level<R: Real>(n: usize) -> R {
    let even = R::lit(0.5).powi((n / 2) as i32);
    if n % 2 == 1 {
        even * R::lit(0.5).sqrt()
    } else {
        even
    }
}

fn check_qubits(n: usize) -> Result<()> {
    if (1..=MAX_QUBITS).contains(&n) {
        Ok(())
    } else {
        Err(Error::QubitCount(n))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QubitStateVector<R> {
    n_qubits: usize,
    amplitudes: Vec<Complex<R>>,
}

impl<R: Real> QubitStateVector<R> {
    /// `|+⟩^⊗n`.
    pub fn plus(n_qubits: usize) -> Result<Self> {
        check_qubits(n_qubits)?;
        let dim = 1usize << n_qubits;
        let amp = uniform_level(n_qubits);
        Ok(Self {
            n_qubits,
            amplitudes: vec![Complex::new(amp, R::zero()); dim],
        })
    }

    /// Takes amplitudes as given; the caller is responsible for the norm.
    pub fn from_amplitudes(amplitudes: Vec<Complex<R>>) -> Result<Self> {
        let dim = amplitudes.len();
        if !dim.is_power_of_two() {
            return Err(Error::QubitCount(0));
        }
        let n_qubits = dim.trailing_zeros() as usize;
        check_qubits(n_qubits)?;
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex<R>] {
        &self.amplitudes
    }

    pub fn amplitude(&self, basis: usize) -> Complex<R> {
        self.amplitudes[basis]
    }

    pub fn norm_sqr(&self) -> R {
        self.amplitudes
            .iter()
            .fold(R::zero(), |acc, a| acc + a.norm_sqr())
    }

    /// Basis-index mask selecting the given 0-based qubits.
    fn mask(&self, qubits: &[usize]) -> Result<usize> {
        qubits.iter().try_fold(0usize, |mask, &q| {
            if q >= self.n_qubits {
                Err(Error::QubitOutOfRange {
                    qubit: q + 1,
                    n_qubits: self.n_qubits,
                })
            } else {
                Ok(mask | 1 << (self.n_qubits - 1 - q))
            }
        })
    }

    /// In-place `C^kZ` on the 0-based qubits in `targets`: negates every
    /// amplitude whose basis state has all targets set. An empty target set
    /// negates everything.
    pub fn apply_ckz_mut(&mut self, targets: &[usize]) -> Result<()> {
        let mask = self.mask(targets)?;
        let flip = |(idx, a): (usize, &mut Complex<R>)| {
            if idx & mask == mask {
                *a = -*a;
            }
        };
        if self.amplitudes.len() >= PARALLEL_THRESHOLD {
            self.amplitudes.par_iter_mut().enumerate().for_each(flip);
        } else {
            self.amplitudes.iter_mut().enumerate().for_each(flip);
        }
        Ok(())
    }

    pub fn apply_ckz(&self, targets: &[usize]) -> Result<Self> {
        let mut out = self.clone();
        out.apply_ckz_mut(targets)?;
        Ok(out)
    }

    /// `|a⟩ ⊗ |b⟩` with `self`'s qubits first.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        check_qubits(self.n_qubits + other.n_qubits)?;
        let amplitudes = self
            .amplitudes
            .iter()
            .flat_map(|a| other.amplitudes.iter().map(move |b| *a * *b))
            .collect();
        Ok(Self {
            n_qubits: self.n_qubits + other.n_qubits,
            amplitudes,
        })
    }

    /// Reorders qubits: qubit `i` of `self` becomes qubit `positions[i]`.
    pub fn permute_qubits(&self, positions: &[usize]) -> Result<Self> {
        let n = self.n_qubits;
        let mut seen = vec![false; n];
        if positions.len() != n
            || positions
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::LengthMismatch {
                what: "qubit positions",
                expected: n,
                got: positions.len(),
            });
        }
        let mut amplitudes = vec![Complex::new(R::zero(), R::zero()); self.amplitudes.len()];
        for (idx, &a) in self.amplitudes.iter().enumerate() {
            let mut target = 0usize;
            for (q, &pos) in positions.iter().enumerate() {
                if idx >> (n - 1 - q) & 1 == 1 {
                    target |= 1 << (n - 1 - pos);
                }
            }
            amplitudes[target] = a;
        }
        Ok(Self {
            n_qubits: n,
            amplitudes,
        })
    }

    /// Every amplitude within `tol` of `±2^{−n/2}` with imaginary part within `tol` of 0.
    pub fn is_real_equally_weighted(&self, tol: R) -> bool {
        let level: R = uniform_level(self.n_qubits);
        self.amplitudes
            .iter()
            .all(|a| abs(a.im) <= tol && abs(abs(a.re) - level) <= tol)
    }

    /// Bitstring for a basis index, first qubit leftmost.
    pub fn bitstring(&self, basis: usize) -> String {
        (0..self.n_qubits)
            .map(|q| {
                if basis >> (self.n_qubits - 1 - q) & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }
}

/// Truth table of an `n`-input Boolean function, indexed like basis states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanFunctionTable {
    n_inputs: usize,
    outputs: Vec<bool>,
}

impl BooleanFunctionTable {
    pub fn new(n_inputs: usize, outputs: Vec<bool>) -> Result<Self> {
        check_qubits(n_inputs)?;
        if outputs.len() != 1 << n_inputs {
            return Err(Error::TruthTableLength {
                n: n_inputs,
                got: outputs.len(),
            });
        }
        Ok(Self { n_inputs, outputs })
    }

    pub fn n_inputs(&self) -> usize {
        self.n_inputs
    }

    pub fn outputs(&self) -> &[bool] {
        &self.outputs
    }

    pub fn eval(&self, input: usize) -> bool {
        self.outputs[input]
    }

    pub fn count_ones(&self) -> usize {
        self.outputs.iter().filter(|&&b| b).count()
    }
}

/// `f(v) = ⊕_e ∏_{i∈e} v_i`; an empty hyperedge contributes the constant 1.
pub fn boolean_function<T: Scalar>(h: &Hypergraph<T>) -> Result<BooleanFunctionTable> {
    let n = h.n_vertices();
    check_qubits(n)?;
    let masks: Vec<usize> = h
        .edges()
        .iter()
        .map(|e| e.members().iter().fold(0, |m, &v| m | 1 << (n - 1 - v)))
        .collect();
    let outputs = (0..1usize << n)
        .map(|v| masks.iter().filter(|&&m| v & m == m).count() % 2 == 1)
        .collect();
    BooleanFunctionTable::new(n, outputs)
}

/// `2^{−n/2} Σ_v (−1)^{f(v)} |v⟩`.
pub fn state_from_boolean_function<R: Real>(table: &BooleanFunctionTable) -> QubitStateVector<R> {
    let level: R = uniform_level(table.n_inputs);
    let amplitudes = table
        .outputs
        .iter()
        .map(|&bit| Complex::new(if bit { -level } else { level }, R::zero()))
        .collect();
    QubitStateVector {
        n_qubits: table.n_inputs,
        amplitudes,
    }
}

/// `∏_e C^{|e|}Z_e |+⟩^⊗n`. Hyperedge weights play no role. With
/// `global_gate` an extra `C^nZ` over all qubits is applied.
pub fn encode_hypergraph<R: Real, T: Scalar>(
    h: &Hypergraph<T>,
    global_gate: bool,
) -> Result<QubitStateVector<R>> {
    let mut state = QubitStateVector::plus(h.n_vertices())?;
    for e in h.edges() {
        state.apply_ckz_mut(e.members())?;
    }
    if global_gate {
        let all: Vec<usize> = (0..h.n_vertices()).collect();
        state.apply_ckz_mut(&all)?;
    }
    Ok(state)
}

/// Per-part encodings of a covering partition.
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionedEncoding<R> {
    /// One state per part, in part order, on that part's vertices in
    /// ascending order.
    pub parts: Vec<QubitStateVector<R>>,
    /// Tensor product of the part states with qubit `i` re-indexed to vertex `i`.
    pub product: QubitStateVector<R>,
}

/// Encodes the sub-hypergraph induced on each part (hyperedges entirely
/// inside it). Cut hyperedges are dropped. Empty hyperedges are assigned to
/// the first part so the product matches the whole-graph encoding whenever
/// nothing is cut.
pub fn encode_partitioned<R: Real, T: Scalar>(
    p: &PartitionEnsemble<'_, T>,
) -> Result<PartitionedEncoding<R>> {
    let h = p.parent();
    if let Some(v) = p.assignment().iter().position(Option::is_none) {
        return Err(Error::UnassignedVertex { vertex: v + 1 });
    }
    let mut parts = Vec::with_capacity(p.n_parts());
    let mut order = Vec::with_capacity(h.n_vertices());
    for (k, part) in p.parts().iter().enumerate() {
        let mut vertices = part.clone();
        vertices.sort_unstable();
        if vertices.is_empty() {
            return Err(Error::QubitCount(0));
        }
        let sub = h.induced(&vertices, k == 0)?;
        parts.push(encode_hypergraph(&sub, false)?);
        order.extend(vertices);
    }
    let mut product = parts[0].clone();
    for s in &parts[1..] {
        product = product.tensor(s)?;
    }
    let mut product = product.permute_qubits(&order)?;
    // Products of odd-n levels like 2^{-1/2}·2^{-1/2} round away from the
    // exact 2^{-n/2}; every factor is ±level, so only the signs carry over.
    let level: R = uniform_level(product.n_qubits);
    for a in &mut product.amplitudes {
        *a = Complex::new(if a.re < R::zero() { -level } else { level }, R::zero());
    }
    Ok(PartitionedEncoding { parts, product })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn four_vertex() -> Hypergraph<f64> {
        Hypergraph::from_one_based(
            4,
            None,
            [
                (vec![1, 2, 3], 1.0),
                (vec![2, 3, 4], 2.0),
                (vec![1, 4], 3.0),
            ],
        )
        .unwrap()
    }

    fn real(s: &QubitStateVector<f64>) -> Vec<f64> {
        s.amplitudes().iter().map(|a| a.re).collect()
    }

    #[test]
    fn plus_states() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(real(&QubitStateVector::plus(1).unwrap()), vec![h, h]);
        assert_eq!(
            real(&QubitStateVector::<f64>::plus(2).unwrap()),
            vec![0.5; 4]
        );
        assert_eq!(
            QubitStateVector::<f64>::plus(21),
            Err(Error::QubitCount(21))
        );
        assert_eq!(QubitStateVector::<f64>::plus(0), Err(Error::QubitCount(0)));
    }

    #[test]
    fn controlled_z() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let s = QubitStateVector::plus(1).unwrap().apply_ckz(&[0]).unwrap();
        assert_eq!(real(&s), vec![h, -h]);
        let s = QubitStateVector::<f64>::plus(2)
            .unwrap()
            .apply_ckz(&[0, 1])
            .unwrap();
        assert_eq!(real(&s), vec![0.5, 0.5, 0.5, -0.5]);
        assert_eq!(
            s.apply_ckz(&[0, 1]).unwrap(),
            QubitStateVector::plus(2).unwrap()
        );
        assert!(matches!(
            s.apply_ckz(&[2]),
            Err(Error::QubitOutOfRange { qubit: 3, .. })
        ));
        let g = s.apply_ckz(&[]).unwrap();
        assert_eq!(real(&g), vec![-0.5, -0.5, -0.5, 0.5]);
    }

    #[test]
    fn worked_example_amplitudes() {
        let s: QubitStateVector<f64> = encode_hypergraph(&four_vertex(), false).unwrap();
        assert_eq!(s.amplitude(0b0000).re, 0.25);
        assert_eq!(s.amplitude(0b1001).re, -0.25);
        assert_eq!(s.amplitude(0b1111).re, -0.25);
        assert!(s.is_real_equally_weighted(1e-12));
        let t: QubitStateVector<f64> = encode_hypergraph(&four_vertex(), true).unwrap();
        assert_eq!(t.amplitude(0b1111).re, 0.25);
        assert_eq!(t.amplitude(0b1001), s.amplitude(0b1001));
    }

    #[test]
    fn truth_tables() {
        let h = Hypergraph::from_one_based(2, None, [(vec![1, 2], 1.0)]).unwrap();
        assert_eq!(
            boolean_function(&h).unwrap().outputs(),
            &[false, false, false, true]
        );
        let empty = Hypergraph::<f64>::new(3, None, vec![]).unwrap();
        assert_eq!(boolean_function(&empty).unwrap().count_ones(), 0);
        assert!(boolean_function(&four_vertex()).unwrap().eval(0b1111));
        let table = boolean_function(&four_vertex()).unwrap();
        assert_eq!(
            state_from_boolean_function::<f64>(&table),
            encode_hypergraph(&four_vertex(), false).unwrap()
        );
    }

    #[test]
    fn boolean_states() {
        let zeros = BooleanFunctionTable::new(2, vec![false; 4]).unwrap();
        assert_eq!(
            state_from_boolean_function::<f64>(&zeros),
            QubitStateVector::plus(2).unwrap()
        );
        let ones = BooleanFunctionTable::new(3, vec![true; 8]).unwrap();
        let s = state_from_boolean_function::<f64>(&ones);
        let plus = QubitStateVector::<f64>::plus(3).unwrap();
        assert!(s
            .amplitudes()
            .iter()
            .zip(plus.amplitudes())
            .all(|(a, b)| *a == -*b));
        assert!(BooleanFunctionTable::new(2, vec![false; 3]).is_err());
    }

    #[test]
    fn equal_weight_check() {
        assert!(QubitStateVector::<f64>::plus(5)
            .unwrap()
            .is_real_equally_weighted(1e-12));
        let mut amps = vec![Complex::new(0.0, 0.0); 8];
        amps[0] = Complex::new(1.0, 0.0);
        let s = QubitStateVector::from_amplitudes(amps).unwrap();
        assert!(!s.is_real_equally_weighted(1e-12));
    }

    #[test]
    fn partitioned_encodings() {
        let h = four_vertex();
        let whole = PartitionEnsemble::new(&h, vec![vec![0, 1, 2, 3]], 0.1).unwrap();
        let enc = encode_partitioned::<f64, _>(&whole).unwrap();
        assert_eq!(enc.parts.len(), 1);
        assert_eq!(enc.parts[0], encode_hypergraph(&h, false).unwrap());

        let split = PartitionEnsemble::new(&h, vec![vec![0, 3], vec![1, 2]], 0.1).unwrap();
        let enc = encode_partitioned::<f64, _>(&split).unwrap();
        assert_eq!(real(&enc.parts[0]), vec![0.5, 0.5, 0.5, -0.5]);
        assert_eq!(enc.parts[1], QubitStateVector::plus(2).unwrap());
        // Vertex 1 and 4 carry the CZ; in original order those are qubits 0 and 3.
        assert_eq!(
            enc.product,
            encode_hypergraph(
                &Hypergraph::from_one_based(4, None, [(vec![1, 4], 1.0)]).unwrap(),
                false
            )
            .unwrap()
        );

        let singles = PartitionEnsemble::new(&h, (0..4).map(|v| vec![v]).collect(), 0.1).unwrap();
        let enc = encode_partitioned::<f64, _>(&singles).unwrap();
        assert!(enc
            .parts
            .iter()
            .all(|s| *s == QubitStateVector::plus(1).unwrap()));

        let partial = PartitionEnsemble::new(&h, vec![vec![0, 1]], 0.1).unwrap();
        assert!(encode_partitioned::<f64, _>(&partial).is_err());
    }

    #[test]
    fn bitstrings_put_first_qubit_left() {
        let s = QubitStateVector::<f64>::plus(4).unwrap();
        assert_eq!(s.bitstring(0b1001), "1001");
        assert_eq!(s.bitstring(1), "0001");
    }

    #[test]
    fn permutation_moves_qubits() {
        // CZ on qubits 0,1 of a 3-qubit state, moved to qubits 1,2.
        let s = QubitStateVector::<f64>::plus(3)
            .unwrap()
            .apply_ckz(&[0, 1])
            .unwrap();
        let moved = s.permute_qubits(&[1, 2, 0]).unwrap();
        let direct = QubitStateVector::<f64>::plus(3)
            .unwrap()
            .apply_ckz(&[1, 2])
            .unwrap();
        assert_eq!(moved, direct);
        assert!(s.permute_qubits(&[0, 0, 1]).is_err());
    }
}
