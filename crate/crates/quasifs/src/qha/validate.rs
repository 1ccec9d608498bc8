//! Two-level axiom validation.
//!
//! The `core` level checks exactly the facts the indicator computation relies
//! on: the counit axiom, that `eps` and `Delta` are algebra maps, that the
//! counit kills every tensor factor of `phi`, that `phi` is invertible, that
//! `S` is anti-multiplicative and unital, and the four quasi-antipode
//! equations. The `strict` level adds the remaining Drinfeld axioms:
//! associativity and unitality of the multiplication, quasi-coassociativity,
//! and the pentagon. Failures are report entries with a witness index tuple,
//! never panics.

use crate::linalg::Tensor;

use super::QuasiHopfAlgebra;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidationLevel {
    Core,
    Strict,
}

#[derive(Debug, Clone)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub passed: bool,
    /// Basis index tuple witnessing the first failure, when one exists.
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub level: ValidationLevel,
    pub checks: Vec<AxiomCheck>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn first_diff(a: &Tensor, b: &Tensor) -> Option<Vec<usize>> {
    debug_assert_eq!(a.legs(), b.legs());
    let mut idx = vec![0usize; a.legs().len()];
    for flat in 0..a.entries().len() {
        if a.entries()[flat] != b.entries()[flat] {
            let mut rem = flat;
            for (i, &d) in a.legs().iter().enumerate().rev() {
                idx[i] = rem % d;
                rem /= d;
            }
            return Some(idx);
        }
    }
    None
}

impl QuasiHopfAlgebra {
    pub fn validate(&self, level: ValidationLevel) -> ValidationReport {
        let mut checks = Vec::new();
        self.check_counit_axiom(&mut checks);
        self.check_algebra_maps(&mut checks);
        self.check_phi_counit_legs(&mut checks);
        self.check_phi_invertible(&mut checks);
        self.check_antipode_algebra(&mut checks);
        self.check_quasi_antipode_equations(&mut checks);
        if level == ValidationLevel::Strict {
            self.check_associativity(&mut checks);
            self.check_unit(&mut checks);
            self.check_quasi_coassociativity(&mut checks);
            self.check_pentagon(&mut checks);
        }
        ValidationReport { level, checks }
    }

    fn check_counit_axiom(&self, checks: &mut Vec<AxiomCheck>) {
        let n = self.dim();
        let mut left = AxiomCheck {
            name: "counit-left",
            passed: true,
            witness: None,
        };
        let mut right = AxiomCheck {
            name: "counit-right",
            passed: true,
            witness: None,
        };
        'left: for i in 0..n {
            let t = self.delta(&self.basis_element(i));
            let collapsed = self.counit_leg(&t, 0);
            for k in 0..n {
                let expected = if k == i {
                    self.field().one()
                } else {
                    self.field().zero()
                };
                if *collapsed.get(&[k]) != expected {
                    left.passed = false;
                    left.witness = Some(vec![i, k]);
                    break 'left;
                }
            }
        }
        'right: for i in 0..n {
            let t = self.delta(&self.basis_element(i));
            let collapsed = self.counit_leg(&t, 1);
            for k in 0..n {
                let expected = if k == i {
                    self.field().one()
                } else {
                    self.field().zero()
                };
                if *collapsed.get(&[k]) != expected {
                    right.passed = false;
                    right.witness = Some(vec![i, k]);
                    break 'right;
                }
            }
        }
        checks.push(left);
        checks.push(right);
    }

    fn check_algebra_maps(&self, checks: &mut Vec<AxiomCheck>) {
        let n = self.dim();
        let mut eps_map = AxiomCheck {
            name: "counit-algebra-map",
            passed: true,
            witness: None,
        };
        if !self.eps(&self.unit_element()).is_one() {
            eps_map.passed = false;
            eps_map.witness = Some(vec![]);
        }
        'eps: for i in 0..n {
            for j in 0..n {
                let prod = self.mul_elements(&self.basis_element(i), &self.basis_element(j));
                let lhs = self.eps(&prod);
                let rhs = &self.eps(&self.basis_element(i)) * &self.eps(&self.basis_element(j));
                if lhs != rhs {
                    eps_map.passed = false;
                    eps_map.witness = Some(vec![i, j]);
                    break 'eps;
                }
            }
        }
        checks.push(eps_map);

        let mut comult_unital = AxiomCheck {
            name: "comult-unital",
            passed: true,
            witness: None,
        };
        let unit2 = self.tensor_unit(2);
        let d1 = self.delta(&self.unit_element());
        if let Some(w) = first_diff(&d1, &unit2) {
            comult_unital.passed = false;
            comult_unital.witness = Some(w);
        }
        checks.push(comult_unital);

        let mut comult_map = AxiomCheck {
            name: "comult-algebra-map",
            passed: true,
            witness: None,
        };
        'comult: for i in 0..n {
            let di = self.delta(&self.basis_element(i));
            for j in 0..n {
                let dj = self.delta(&self.basis_element(j));
                let lhs = self.tensor_mul(&di, &dj);
                let rhs = self.delta(&self.mul_elements(&self.basis_element(i), &self.basis_element(j)));
                if first_diff(&lhs, &rhs).is_some() {
                    comult_map.passed = false;
                    comult_map.witness = Some(vec![i, j]);
                    break 'comult;
                }
            }
        }
        checks.push(comult_map);
    }

    fn check_phi_counit_legs(&self, checks: &mut Vec<AxiomCheck>) {
        let unit2 = self.tensor_unit(2);
        let names = ["phi-counit-leg1", "phi-counit-leg2", "phi-counit-leg3"];
        for leg in 0..3 {
            let collapsed = self.counit_leg(self.phi(), leg);
            let witness = first_diff(&collapsed, &unit2);
            checks.push(AxiomCheck {
                name: names[leg],
                passed: witness.is_none(),
                witness,
            });
        }
    }

    fn check_phi_invertible(&self, checks: &mut Vec<AxiomCheck>) {
        let unit3 = self.tensor_unit(3);
        let forward = self.tensor_mul(self.phi(), self.phi_inv());
        let backward = self.tensor_mul(self.phi_inv(), self.phi());
        let witness = first_diff(&forward, &unit3).or_else(|| first_diff(&backward, &unit3));
        checks.push(AxiomCheck {
            name: "phi-invertible",
            passed: witness.is_none(),
            witness,
        });
    }

    fn check_antipode_algebra(&self, checks: &mut Vec<AxiomCheck>) {
        let n = self.dim();
        let mut anti = AxiomCheck {
            name: "antipode-anti-multiplicative",
            passed: true,
            witness: None,
        };
        'anti: for i in 0..n {
            let si = self.apply_antipode(&self.basis_element(i));
            for j in 0..n {
                let sj = self.apply_antipode(&self.basis_element(j));
                let lhs =
                    self.apply_antipode(&self.mul_elements(&self.basis_element(i), &self.basis_element(j)));
                let rhs = self.mul_elements(&sj, &si);
                if lhs != rhs {
                    anti.passed = false;
                    anti.witness = Some(vec![i, j]);
                    break 'anti;
                }
            }
        }
        checks.push(anti);

        let unital = self.apply_antipode(&self.unit_element()) == self.unit_element();
        checks.push(AxiomCheck {
            name: "antipode-unital",
            passed: unital,
            witness: if unital { None } else { Some(vec![]) },
        });
    }

    fn check_quasi_antipode_equations(&self, checks: &mut Vec<AxiomCheck>) {
        let alpha = self.alpha();
        let beta = self.beta();

        let alpha_witness = self.alpha_equation_witness(&alpha);
        checks.push(AxiomCheck {
            name: "antipode-alpha",
            passed: alpha_witness.is_none(),
            witness: alpha_witness.map(|i| vec![i]),
        });

        let beta_witness = self.beta_equation_witness(&beta);
        checks.push(AxiomCheck {
            name: "antipode-beta",
            passed: beta_witness.is_none(),
            witness: beta_witness.map(|i| vec![i]),
        });

        let norm1 = self.phi_normalization_one(&alpha, &beta) == self.unit_element();
        checks.push(AxiomCheck {
            name: "phi-normalization-1",
            passed: norm1,
            witness: if norm1 { None } else { Some(vec![]) },
        });

        let norm2 = self.phi_normalization_two(&alpha, &beta) == self.unit_element();
        checks.push(AxiomCheck {
            name: "phi-normalization-2",
            passed: norm2,
            witness: if norm2 { None } else { Some(vec![]) },
        });
    }

    fn check_associativity(&self, checks: &mut Vec<AxiomCheck>) {
        let n = self.dim();
        let mut check = AxiomCheck {
            name: "mult-associative",
            passed: true,
            witness: None,
        };
        'outer: for i in 0..n {
            for j in 0..n {
                let ij = self.mul_elements(&self.basis_element(i), &self.basis_element(j));
                for k in 0..n {
                    let lhs = self.mul_elements(&ij, &self.basis_element(k));
                    let jk = self.mul_elements(&self.basis_element(j), &self.basis_element(k));
                    let rhs = self.mul_elements(&self.basis_element(i), &jk);
                    if lhs != rhs {
                        check.passed = false;
                        check.witness = Some(vec![i, j, k]);
                        break 'outer;
                    }
                }
            }
        }
        checks.push(check);
    }

    fn check_unit(&self, checks: &mut Vec<AxiomCheck>) {
        let n = self.dim();
        let mut check = AxiomCheck {
            name: "mult-unital",
            passed: true,
            witness: None,
        };
        let one = self.unit_element();
        for j in 0..n {
            let e = self.basis_element(j);
            if self.mul_elements(&one, &e) != e || self.mul_elements(&e, &one) != e {
                check.passed = false;
                check.witness = Some(vec![j]);
                break;
            }
        }
        checks.push(check);
    }

    fn check_quasi_coassociativity(&self, checks: &mut Vec<AxiomCheck>) {
        let n = self.dim();
        let mut check = AxiomCheck {
            name: "quasi-coassociativity",
            passed: true,
            witness: None,
        };
        // (id (x) Delta)(Delta h) . phi = phi . (Delta (x) id)(Delta h)
        for i in 0..n {
            let d = self.delta(&self.basis_element(i));
            let lhs = self.tensor_mul(&self.delta_leg(&d, 1), self.phi());
            let rhs = self.tensor_mul(self.phi(), &self.delta_leg(&d, 0));
            if first_diff(&lhs, &rhs).is_some() {
                check.passed = false;
                check.witness = Some(vec![i]);
                break;
            }
        }
        checks.push(check);
    }

    fn check_pentagon(&self, checks: &mut Vec<AxiomCheck>) {
        // (id (x) id (x) Delta)(phi) . (Delta (x) id (x) id)(phi)
        //   = (1 (x) phi) . (id (x) Delta (x) id)(phi) . (phi (x) 1)
        let lhs = self.tensor_mul(
            &self.delta_leg(self.phi(), 2),
            &self.delta_leg(self.phi(), 0),
        );
        let unit1 = self.element_tensor(&self.unit_element());
        let one_phi = unit1
            .contract(self.phi(), &[])
            .expect("outer product cannot fail");
        let phi_one = self
            .phi()
            .contract(&unit1, &[])
            .expect("outer product cannot fail");
        let mid = self.delta_leg(self.phi(), 1);
        let rhs = self.tensor_mul(&self.tensor_mul(&one_phi, &mid), &phi_one);
        let witness = first_diff(&lhs, &rhs);
        checks.push(AxiomCheck {
            name: "pentagon",
            passed: witness.is_none(),
            witness,
        });
    }
}
