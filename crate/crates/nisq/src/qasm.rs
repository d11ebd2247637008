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

//! OpenQASM 2.0 emission and a strict parser for the emitted dialect.
//!
//! Phase gates map to `u1`/`cu1`. Angles are printed with 17 significant
//! digits, enough to reconstruct the exact double on re-parse, so
//! emit → parse → emit is byte-stable.

use pqm_sim::{Circuit, Gate, SimError};

use crate::error::NisqError;

/// Serializes a basis circuit as OpenQASM 2.0.
///
/// All qubits land in one `q` register; `measured[k]` is read out into
/// classical bit `c[k]`. The classical register is declared only when
/// something is measured. Output is byte-deterministic.
pub fn emit_qasm(circuit: &Circuit, measured: &[usize]) -> Result<String, NisqError> {
    let n = circuit.num_qubits();
    for &q in measured {
        if q >= n {
            return Err(SimError::QubitOutOfRange { qubit: q, num_qubits: n }.into());
        }
    }
    let mut text = String::new();
    text.push_str("OPENQASM 2.0;\n");
    text.push_str("include \"qelib1.inc\";\n");
    text.push_str(&format!("qreg q[{n}];\n"));
    if !measured.is_empty() {
        text.push_str(&format!("creg c[{}];\n", measured.len()));
    }
    for gate in circuit.ops() {
        let line = match *gate {
            Gate::X { target } => format!("x q[{target}];"),
            Gate::H { target } => format!("h q[{target}];"),
            Gate::Phase { target, theta } => format!("u1({theta:.16e}) q[{target}];"),
            Gate::CPhase { control, target, theta } => {
                format!("cu1({theta:.16e}) q[{control}],q[{target}];")
            }
            Gate::Cx { control, target } => format!("cx q[{control}],q[{target}];"),
            ref other => return Err(NisqError::NonBasisGate(other.name().to_owned())),
        };
        text.push_str(&line);
        text.push('\n');
    }
    for (k, &q) in measured.iter().enumerate() {
        text.push_str(&format!("measure q[{q}] -> c[{k}];\n"));
    }
    Ok(text)
}

struct LineParser {
    line: usize,
}

impl LineParser {
    fn fail(&self, detail: impl Into<String>) -> NisqError {
        NisqError::QasmParse { line: self.line, detail: detail.into() }
    }

    /// Splits `q[i]` (or `c[i]`) into its index.
    fn register_index(&self, token: &str, register: char) -> Result<usize, NisqError> {
        let inner = token
            .strip_prefix(register)
            .and_then(|rest| rest.strip_prefix('['))
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| self.fail(format!("expected {register}[<index>], got `{token}`")))?;
        inner.parse().map_err(|_| self.fail(format!("bad index in `{token}`")))
    }

    fn angle(&self, token: &str) -> Result<f64, NisqError> {
        token.parse().map_err(|_| self.fail(format!("bad angle `{token}`")))
    }
}

/// Parses text produced by [`emit_qasm`] back into a circuit and its
/// measured-qubit list.
///
/// The dialect is exactly what `emit_qasm` writes: the 2.0 header, one
/// `q` register, an optional `c` register, then `x`/`h`/`u1`/`cu1`/`cx`
/// statements followed by the measurements. Anything else is rejected
/// with its line number.
pub fn parse_qasm(text: &str) -> Result<(Circuit, Vec<usize>), NisqError> {
    let mut statements = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.trim()))
        .filter(|(_, s)| !s.is_empty());
    let mut expect = |want: &str| -> Result<(), NisqError> {
        match statements.next() {
            Some((_, got)) if got == want => Ok(()),
            Some((line, got)) => Err(NisqError::QasmParse {
                line,
                detail: format!("expected `{want}`, got `{got}`"),
            }),
            None => Err(NisqError::QasmParse {
                line: 0,
                detail: format!("expected `{want}`, got end of input"),
            }),
        }
    };
    expect("OPENQASM 2.0;")?;
    expect("include \"qelib1.inc\";")?;

    let mut circuit: Option<Circuit> = None;
    let mut classical_bits: Option<usize> = None;
    let mut measured: Vec<Option<usize>> = Vec::new();
    let mut seen_measure = false;

    for (line, raw) in statements {
        let parser = LineParser { line };
        let statement = raw
            .strip_suffix(';')
            .ok_or_else(|| parser.fail("missing trailing `;`"))?
            .trim();

        if let Some(rest) = statement.strip_prefix("qreg ") {
            if circuit.is_some() {
                return Err(parser.fail("second qreg"));
            }
            let n = parser.register_index(rest.trim(), 'q')?;
            circuit = Some(Circuit::new(&[("q", n)])?);
            continue;
        }
        if let Some(rest) = statement.strip_prefix("creg ") {
            if classical_bits.is_some() || circuit.is_none() {
                return Err(parser.fail("creg must follow the qreg, once"));
            }
            let m = parser.register_index(rest.trim(), 'c')?;
            classical_bits = Some(m);
            measured = vec![None; m];
            continue;
        }
        let circuit = circuit.as_mut().ok_or_else(|| parser.fail("statement before qreg"))?;

        if let Some(rest) = statement.strip_prefix("measure ") {
            let (qubit, bit) = rest
                .split_once("->")
                .ok_or_else(|| parser.fail("measure needs `q[i] -> c[k]`"))?;
            let qubit = parser.register_index(qubit.trim(), 'q')?;
            let bit = parser.register_index(bit.trim(), 'c')?;
            let slot = measured
                .get_mut(bit)
                .ok_or_else(|| parser.fail(format!("classical bit {bit} out of range")))?;
            if slot.replace(qubit).is_some() {
                return Err(parser.fail(format!("classical bit {bit} written twice")));
            }
            seen_measure = true;
            continue;
        }
        if seen_measure {
            return Err(parser.fail("gate after measurement"));
        }

        let (head, operands) = statement
            .split_once(' ')
            .ok_or_else(|| parser.fail(format!("unparseable statement `{statement}`")))?;
        let operands: Vec<&str> = operands.split(',').map(str::trim).collect();
        let two = |parser: &LineParser| -> Result<(usize, usize), NisqError> {
            if operands.len() != 2 {
                return Err(parser.fail("expected two operands"));
            }
            Ok((
                parser.register_index(operands[0], 'q')?,
                parser.register_index(operands[1], 'q')?,
            ))
        };
        let gate = match head {
            "x" | "h" => {
                if operands.len() != 1 {
                    return Err(parser.fail("expected one operand"));
                }
                let target = parser.register_index(operands[0], 'q')?;
                if head == "x" {
                    Gate::X { target }
                } else {
                    Gate::H { target }
                }
            }
            "cx" => {
                let (control, target) = two(&parser)?;
                Gate::Cx { control, target }
            }
            _ => {
                let (name, theta) = head
                    .split_once('(')
                    .and_then(|(name, rest)| Some((name, rest.strip_suffix(')')?)))
                    .ok_or_else(|| parser.fail(format!("unknown statement `{statement}`")))?;
                let theta = parser.angle(theta)?;
                match name {
                    "u1" => {
                        if operands.len() != 1 {
                            return Err(parser.fail("expected one operand"));
                        }
                        Gate::Phase { target: parser.register_index(operands[0], 'q')?, theta }
                    }
                    "cu1" => {
                        let (control, target) = two(&parser)?;
                        Gate::CPhase { control, target, theta }
                    }
                    other => return Err(parser.fail(format!("unknown gate `{other}`"))),
                }
            }
        };
        circuit.push(gate).map_err(|e| parser.fail(e.to_string()))?;
    }

    let circuit = circuit
        .ok_or(NisqError::QasmParse { line: 0, detail: "no qreg declared".into() })?;
    let measured: Vec<usize> = measured
        .into_iter()
        .enumerate()
        .map(|(bit, slot)| {
            slot.ok_or(NisqError::QasmParse {
                line: 0,
                detail: format!("classical bit {bit} never assigned"),
            })
        })
        .collect::<Result<_, _>>()?;
    Ok((circuit, measured))
}
