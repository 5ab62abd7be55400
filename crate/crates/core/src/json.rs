//! Deterministic JSON for every report. Big integers are decimal strings,
//! field elements use the text accepted by the parsers, counts are numbers.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::arith::poly::{ParseCoeff, Poly};
use crate::domain::{FactoredIdeal, Membership};
use crate::intpoly::presentation::{GlobalRelationsReport, PresentationReport};
use crate::intpoly::{Expansion, IdealReport, RegularBasis, RelationCheck};
use crate::quad_ideal::{ClassGroupTable, PogResult, QuadIdeal};
use crate::wpc::{ConditionSuite, SplitReport, WpcReport};

pub trait ToJson {
    fn to_json(&self) -> Value;
}

fn big(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

fn bigs(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(big).collect())
}

fn elem<F: ParseCoeff>(x: &F) -> Value {
    Value::String(x.format_coeff())
}

impl<F: ParseCoeff> ToJson for Poly<F> {
    fn to_json(&self) -> Value {
        Value::Array(self.coeffs().iter().map(elem).collect())
    }
}

impl<F: ParseCoeff> ToJson for RegularBasis<F> {
    fn to_json(&self) -> Value {
        let basis: Vec<Value> = self
            .polys
            .iter()
            .enumerate()
            .map(|(n, g)| {
                json!({
                    "n": n,
                    "sigma": elem(&self.sigmas[n]),
                    "poly": g.to_json(),
                    "bezout": self.bezout[n]
                        .iter()
                        .map(|(k, a)| json!({"k": k, "a": elem(a)}))
                        .collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({"domain": self.domain.to_string(), "upto": self.polys.len() - 1, "basis": basis})
    }
}

impl<E: ParseCoeff> ToJson for Membership<E> {
    fn to_json(&self) -> Value {
        json!({
            "member": self.member,
            "witness": self.witness.as_ref().map(elem),
            "value": self.value.as_ref().map(elem),
            "method": self.method,
        })
    }
}

impl<F: ParseCoeff> ToJson for Expansion<F> {
    fn to_json(&self) -> Value {
        match self {
            Expansion::Coefficients(c) => json!({
                "integral": true,
                "coefficients": c.iter().map(elem).collect::<Vec<_>>(),
            }),
            Expansion::NotIntegral { index, coefficient } => json!({
                "integral": false,
                "index": index,
                "coefficient": elem(coefficient),
            }),
        }
    }
}

impl ToJson for FactoredIdeal {
    fn to_json(&self) -> Value {
        Value::Array(
            self.factors()
                .map(|(p, e)| json!({"prime": p.to_string(), "norm": big(&p.norm), "exponent": big(e)}))
                .collect(),
        )
    }
}

impl ToJson for IdealReport {
    fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "factorial": self.factorial.to_string(),
            "factorial_factors": self.factorial.to_json(),
            "characteristic": self.characteristic.to_string(),
        })
    }
}

impl ToJson for QuadIdeal {
    fn to_json(&self) -> Value {
        json!({
            "content": big(self.content()),
            "a": big(self.a()),
            "b": big(self.b()),
            "disc": big(self.disc()),
            "norm": big(&self.norm()),
            "text": self.to_string(),
        })
    }
}

impl ToJson for ClassGroupTable {
    fn to_json(&self) -> Value {
        json!({
            "disc": big(&self.disc),
            "class_number": self.class_number(),
            "reduced_forms": self.reduced_forms.iter().map(ToJson::to_json).collect::<Vec<_>>(),
            "orders": (0..self.class_number()).map(|c| self.order_of(c)).collect::<Vec<_>>(),
            "table": self.table,
        })
    }
}

impl ToJson for PogResult {
    fn to_json(&self) -> Value {
        json!({
            "d": big(&self.d),
            "disc": big(&self.disc),
            "class_number": self.class_number,
            "generators": self.generators.iter().map(|(p, c)| json!({"p": p, "class": c})).collect::<Vec<_>>(),
            "subgroup": self.subgroup.iter().collect::<Vec<_>>(),
            "element_orders": self.element_orders.iter().map(|(c, o)| json!({"class": c, "order": o})).collect::<Vec<_>>(),
            "order": self.order,
            "is_trivial": self.is_trivial,
            "is_proper": self.is_proper,
        })
    }
}

impl ToJson for RelationCheck {
    fn to_json(&self) -> Value {
        json!({"k": self.k, "degree": big(&self.degree), "holds": self.holds})
    }
}

impl ToJson for PresentationReport {
    fn to_json(&self) -> Value {
        json!({
            "domain": self.domain.to_string(),
            "q": self.q,
            "maxdeg": self.maxdeg,
            "relations": self.relations.iter().map(ToJson::to_json).collect::<Vec<_>>(),
            "monomials": self.monomials.iter().map(|m| json!({
                "n": m.n,
                "exponents": m.exponents,
                "degree": m.degree,
                "lead_matches": m.lead_matches,
            })).collect::<Vec<_>>(),
            "distinct_degrees": self.distinct_degrees,
            "pass": self.pass,
        })
    }
}

impl ToJson for GlobalRelationsReport {
    fn to_json(&self) -> Value {
        json!({
            "domain": self.domain.to_string(),
            "depth": self.depth,
            "towers": self.towers.iter().map(|(q, top, rels)| json!({
                "q": q,
                "top_degree": big(top),
                "relations": rels.iter().map(ToJson::to_json).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "pass": self.pass,
        })
    }
}

impl ToJson for WpcReport {
    fn to_json(&self) -> Value {
        json!({
            "order": big(&self.order),
            "primes_checked": self.primes.iter().map(|v| v.p).collect::<Vec<_>>(),
            "verdicts": self.primes.iter().map(|v| json!({
                "p": v.p,
                "residues": v.residues,
                "condition_1": v.congruence,
                "condition_2": v.frobenius,
                "witness": v.witness.as_ref().map(|w| json!({"element": bigs(&w.element), "power": bigs(&w.power)})),
            })).collect::<Vec<_>>(),
            "overall": self.overall,
            "label": self.label,
        })
    }
}

impl ToJson for ConditionSuite {
    fn to_json(&self) -> Value {
        json!({
            "p": self.p,
            "dim": self.dim,
            "residues": self.residues,
            "condition_2": self.frobenius,
            "condition_4": self.reduced_prime_fields,
            "condition_5": self.embeds_in_fp_power,
            "condition_8": self.max_ideal_product,
            "residue_degrees": self.residue_degrees,
            "component_dims": self.component_dims,
            "nilpotent": self.nilpotent.as_deref().map(bigs),
            "agree": self.agree(),
        })
    }
}

impl ToJson for SplitReport {
    fn to_json(&self) -> Value {
        json!({
            "d": big(&self.d),
            "disc": big(&self.disc),
            "bound": self.bound,
            "primes": self.primes.iter().map(|s| json!({
                "p": s.p,
                "kronecker": s.kronecker,
                "splitting": s.splitting.as_str(),
                "root_count": s.root_count,
                "ideals": s.ideals.iter().map(|i| i.to_string()).collect::<Vec<_>>(),
                "residue_sizes": s.residue_sizes,
                "prime_fields": s.prime_fields,
                "consistent": s.consistent,
            })).collect::<Vec<_>>(),
            "split": self.split,
            "consistent": self.consistent,
        })
    }
}
