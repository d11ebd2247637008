// Copyright contributors to the pqm project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::SimError;
use crate::gate::Gate;

/// Dense unit-norm state over `num_qubits` qubits.
///
/// Basis index `i` assigns qubit `q` the bit `(i >> (num_qubits-1-q)) & 1`:
/// qubit 0 is the most significant position, so index order reads the same
/// way as a pattern string.
#[derive(Debug, Clone)]
pub struct StateVector {
    num_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// The all-zeros computational basis state.
    pub fn zero(num_qubits: usize) -> Self {
        Self::from_basis(num_qubits, 0).expect("index 0 is valid for any width")
    }

    /// A single computational basis state.
    pub fn from_basis(num_qubits: usize, index: usize) -> Result<Self, SimError> {
        let len = 1usize
            .checked_shl(num_qubits as u32)
            .ok_or(SimError::BadAmplitudeCount(0))?;
        if index >= len {
            return Err(SimError::BasisOutOfRange { index, num_qubits });
        }
        let mut amps = vec![Complex64::ZERO; len];
        amps[index] = Complex64::ONE;
        Ok(Self { num_qubits, amps })
    }

    /// Wraps an explicit amplitude vector; the length must be a power of two
    /// and the norm must already be 1 within 1e-10.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self, SimError> {
        let len = amps.len();
        if len == 0 || !len.is_power_of_two() {
            return Err(SimError::BadAmplitudeCount(len));
        }
        let state = Self { num_qubits: len.trailing_zeros() as usize, amps };
        let n2 = state.norm_sqr();
        if (n2 - 1.0).abs() > 1e-10 {
            return Err(SimError::NotNormalized(n2));
        }
        Ok(state)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amps[index]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Index mask selecting `qubit`'s bit (big-endian layout).
    fn mask(&self, qubit: usize) -> usize {
        1 << (self.num_qubits - 1 - qubit)
    }

    fn controls_mask(&self, controls: &[usize]) -> usize {
        controls.iter().fold(0, |m, &q| m | self.mask(q))
    }

    /// Applies one gate in place. Norm is preserved up to rounding.
    pub fn apply(&mut self, gate: &Gate) -> Result<(), SimError> {
        gate.validate(self.num_qubits)?;
        match gate {
            Gate::X { target } => self.flip(0, self.mask(*target)),
            Gate::H { target } => self.hadamard(self.mask(*target)),
            Gate::Cx { control, target } => self.flip(self.mask(*control), self.mask(*target)),
            Gate::Ccx { controls, target } => {
                self.flip(self.controls_mask(controls), self.mask(*target))
            }
            Gate::Mcx { controls, target } => {
                self.flip(self.controls_mask(controls), self.mask(*target))
            }
            Gate::Phase { target, theta } => {
                let m = self.mask(*target);
                self.phase_where(0, m, m, *theta);
            }
            Gate::ZeroPhase { target, theta } => {
                let m = self.mask(*target);
                self.phase_where(0, m, 0, *theta);
            }
            Gate::CPhase { control, target, theta } => {
                let m = self.mask(*target);
                self.phase_where(self.mask(*control), m, m, *theta);
            }
            Gate::CZeroPhase { control, target, theta } => {
                let m = self.mask(*target);
                self.phase_where(self.mask(*control), m, 0, *theta);
            }
            Gate::AmpSplit { control, target, j } => {
                self.amp_split(self.mask(*control), self.mask(*target), *j)
            }
        }
        Ok(())
    }

    /// X on the target wherever every control bit is set.
    fn flip(&mut self, ctrl: usize, tgt: usize) {
        for i in 0..self.amps.len() {
            if i & ctrl == ctrl && i & tgt == 0 {
                self.amps.swap(i, i | tgt);
            }
        }
    }

    fn hadamard(&mut self, tgt: usize) {
        let f = std::f64::consts::FRAC_1_SQRT_2;
        for i in 0..self.amps.len() {
            if i & tgt == 0 {
                let a = self.amps[i];
                let b = self.amps[i | tgt];
                self.amps[i] = (a + b) * f;
                self.amps[i | tgt] = (a - b) * f;
            }
        }
    }

    /// Multiplies by e^{iθ} wherever the controls are set and the target bit
    /// equals `want` (`want` is either `tgt` or 0).
    fn phase_where(&mut self, ctrl: usize, tgt: usize, want: usize, theta: f64) {
        let ph = Complex64::from_polar(1.0, theta);
        for (i, a) in self.amps.iter_mut().enumerate() {
            if i & ctrl == ctrl && i & tgt == want {
                *a *= ph;
            }
        }
    }

    /// The j-indexed write rotation on (control, target) pairs; see
    /// [`Gate::AmpSplit`].
    fn amp_split(&mut self, ctrl: usize, tgt: usize, j: usize) {
        let s = ((j as f64 - 1.0) / j as f64).sqrt();
        let r = (1.0 / j as f64).sqrt();
        for i in 0..self.amps.len() {
            if i & ctrl == ctrl && i & tgt == 0 {
                let a0 = self.amps[i];
                let a1 = self.amps[i | tgt];
                self.amps[i] = a0 * s + a1 * r;
                self.amps[i | tgt] = a1 * s - a0 * r;
            }
        }
    }

    /// Marginal probability of reading `value` on one qubit.
    pub fn prob_of_qubit(&self, qubit: usize, value: bool) -> Result<f64, SimError> {
        if qubit >= self.num_qubits {
            return Err(SimError::QubitOutOfRange { qubit, num_qubits: self.num_qubits });
        }
        let m = self.mask(qubit);
        let want = if value { m } else { 0 };
        Ok(self
            .amps
            .iter()
            .enumerate()
            .filter(|(i, _)| i & m == want)
            .map(|(_, a)| a.norm_sqr())
            .sum())
    }

    /// Joint distribution over the listed qubits, indexed by the big-endian
    /// reading of their values in list order.
    pub fn marginal_probs(&self, qubits: &[usize]) -> Result<Vec<f64>, SimError> {
        if qubits.is_empty() {
            return Err(SimError::EmptyMeasurement);
        }
        let mut seen = qubits.to_vec();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != qubits.len() {
            return Err(SimError::DuplicateOperands(qubits.to_vec()));
        }
        for &q in qubits {
            if q >= self.num_qubits {
                return Err(SimError::QubitOutOfRange { qubit: q, num_qubits: self.num_qubits });
            }
        }
        let masks: Vec<usize> = qubits.iter().map(|&q| self.mask(q)).collect();
        let mut probs = vec![0.0; 1 << qubits.len()];
        for (i, a) in self.amps.iter().enumerate() {
            let mut bin = 0usize;
            for (pos, &m) in masks.iter().enumerate() {
                if i & m != 0 {
                    bin |= 1 << (qubits.len() - 1 - pos);
                }
            }
            probs[bin] += a.norm_sqr();
        }
        Ok(probs)
    }

    /// Samples one measurement of `qubit` with a ChaCha8 stream seeded by
    /// `rng_seed`, zeroing the non-matching amplitudes and renormalizing.
    pub fn measure_and_collapse(&mut self, qubit: usize, rng_seed: u64) -> Result<bool, SimError> {
        let p0 = self.prob_of_qubit(qubit, false)?;
        let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
        // random::<f64>() < 1.0 strictly, so an exactly-certain outcome can
        // never sample its zero-probability complement.
        let outcome = rng.random::<f64>() >= p0;
        let p_outcome = if outcome { 1.0 - p0 } else { p0 };
        assert!(p_outcome > 0.0, "sampled an outcome of probability zero");
        let m = self.mask(qubit);
        let keep = if outcome { m } else { 0 };
        let scale = 1.0 / p_outcome.sqrt();
        for (i, a) in self.amps.iter_mut().enumerate() {
            if i & m == keep {
                *a *= scale;
            } else {
                *a = Complex64::ZERO;
            }
        }
        Ok(outcome)
    }
}
