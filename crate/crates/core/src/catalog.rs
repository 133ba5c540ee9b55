//! Built-in presentations and coverings.
//!
//! Entries fall in three groups: standard families (cyclic, dihedral,
//! quaternion, extraspecial, Heisenberg), transcriptions of the isoclinism
//! classification for orders p^4/p^5, and stem extensions used as
//! coverings. Every covering entry is validated structurally on load:
//! consistency, kernel centrality, kernel inside the derived subgroup, and
//! the quotient reproducing the base presentation. The multiplier-order
//! claims behind `is_representation_group` come from the literature and are
//! recorded per entry in `provenance`.

use crate::config::Config;
use crate::covering::Covering;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::presentation::{parse_covering, parse_presentation, CoveringSpec, PcPresentation};

/// Instantiation parameters; entries ignore the ones they do not take.
#[derive(Debug, Clone, Copy)]
pub struct Params {
    pub p: u64,
    pub k: u32,
}

impl Default for Params {
    fn default() -> Self {
        Params { p: 3, k: 1 }
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub group: PcPresentation,
    pub covering: Option<CoveringSpec>,
    /// claim that the covering kernel realizes the full Schur multiplier
    pub is_representation_group: bool,
    pub provenance: String,
}

impl CatalogEntry {
    /// Load the covering (or the trivial one for entries with trivial
    /// multiplier) with all structural checks.
    pub fn load_covering(&self, cfg: &Config) -> Result<Covering> {
        let mut cov = match &self.covering {
            Some(spec) => {
                let c = Covering::load(spec, cfg)?;
                if !c.is_stem {
                    return Err(Error::Covering(format!(
                        "catalog covering for `{}` is not a stem extension",
                        self.name
                    )));
                }
                c
            }
            None => {
                let g = Group::build(self.group.clone(), cfg)?;
                Covering::trivial(std::sync::Arc::new(g))
            }
        };
        cov.is_representation_group = self.is_representation_group;
        Ok(cov)
    }

    pub fn build_group(&self, cfg: &Config) -> Result<Group> {
        Group::build(self.group.clone(), cfg)
    }
}

fn require_odd(p: u64, name: &str) -> Result<()> {
    if p < 3 {
        return Err(Error::Invalid(format!("`{name}` needs an odd prime")));
    }
    Ok(())
}

fn require_prime(p: u64) -> Result<()> {
    if p < 2 {
        return Err(Error::Invalid(format!("{p} is not prime")));
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        d += 1;
    }
    Ok(())
}

fn no_params(name: &str, params: &Params, fixed_p: u64) -> Result<()> {
    if params.p != fixed_p && params.p != Params::default().p {
        return Err(Error::Invalid(format!(
            "`{name}` takes no prime parameter (got -p {})",
            params.p
        )));
    }
    Ok(())
}

/// Least quadratic nonresidue mod p.
fn nonresidue(p: u64) -> u64 {
    let mut squares = vec![false; p as usize];
    for x in 1..p {
        squares[(x * x % p) as usize] = true;
    }
    (2..p).find(|&n| !squares[n as usize]).unwrap_or(1)
}

struct Texts {
    group: String,
    covering: Option<String>,
    rep_group: bool,
    provenance: &'static str,
}

/// The exponent-shape maximal-class group (unipotent Jordan chain of
/// length 3). At p = 3 this is Z/3 wr Z/3, which takes a (211) label in
/// the classification; its multiplier is Z/3.
fn entry_shape_maxclass_exponent(p: u64) -> Result<Texts> {
    Ok(Texts {
        group: format!(
            "pcgroup Phi3_211bnu\ngen a b c d\nord a={p} b={p} c={p} d={p}\n\
             conj b^a = b*c\nconj c^a = c*d\nend\n"
        ),
        covering: Some(format!(
            "pcgroup Phi3_211bnucov\ngen a b c d v\nord a={p} b={p} c={p} d={p} v={p}\n\
             conj b^a = b*c\nconj c^a = c*d\nconj c^b = c*v\nend\n\
             kernel v\nquotient Phi3_211bnu\n"
        )),
        rep_group: true,
        provenance: "Z/3 wr Z/3 (exceptional p = 3 member of the (211) labels); M = Z/3 by the wreath-product multiplier formula, unique stem direction confirmed by tail sweep",
    })
}

fn entry_texts(name: &str, params: &Params) -> Result<Texts> {
    let p = params.p;
    let k = params.k;
    let t = match name {
        // ------------------------------------------------------ 2-groups
        "D8" => Texts {
            group: "pcgroup D8\ngen a b\nord a=2 b=4\nconj b^a = b^3\nend\n".into(),
            covering: Some(
                "pcgroup D16cov\ngen a b z\nord a=2 b=4 z=2\npow b = z\nconj b^a = b^3*z\nend\nkernel z\nquotient D8\n"
                    .into(),
            ),
            rep_group: true,
            provenance: "M(D8) = Z/2 (classical); stem cover D16",
        },
        "Q8" => Texts {
            group: "pcgroup Q8\ngen b a z\nord b=2 a=2 z=2\npow b = z\npow a = z\nconj a^b = a*z\nend\n".into(),
            covering: None,
            rep_group: true,
            provenance: "M(Q8) = 1 (classical)",
        },
        "D16" | "16#7" => Texts {
            group: "pcgroup D16\ngen a b\nord a=2 b=8\nconj b^a = b^7\nend\n".into(),
            covering: Some(
                "pcgroup D32cov\ngen a b z\nord a=2 b=8 z=2\npow b = z\nconj b^a = b^7*z\nend\nkernel z\nquotient D16\n"
                    .into(),
            ),
            rep_group: true,
            provenance: "M(D16) = Z/2 (classical); stem cover D32",
        },
        "Q16" | "16#9" => Texts {
            group: "pcgroup Q16\ngen a b\nord a=2 b=8\npow a = b^4\nconj b^a = b^7\nend\n".into(),
            covering: None,
            rep_group: true,
            provenance: "M(Q16) = 1 (generalized quaternion, classical)",
        },
        "SD16" | "16#8" => Texts {
            group: "pcgroup SD16\ngen a b\nord a=2 b=8\nconj b^a = b^3\nend\n".into(),
            covering: None,
            rep_group: true,
            provenance: "M(SD16) = 1 (split metacyclic formula)",
        },
        "M16" | "16#6" => Texts {
            group: "pcgroup M16\ngen a b\nord a=2 b=8\nconj b^a = b^5\nend\n".into(),
            covering: None,
            rep_group: true,
            provenance: "M(Z/8 x|5 Z/2) = 1 (split metacyclic formula)",
        },
        "16#3" => Texts {
            // (Z/2)^2 x| Z/4, the swap action diagonalized: d = [b, a] central
            group: "pcgroup G16_3\ngen a b d\nord a=4 b=2 d=2\nconj b^a = b*d\nend\n".into(),
            covering: Some(
                "pcgroup G16_3cov\ngen a b d u s\nord a=4 b=2 d=2 u=2 s=2\n\
                 pow d = s\nconj b^a = b*d\nconj d^a = d*u\nconj d^b = d*s\nend\n\
                 kernel u s\nquotient G16_3\n"
                    .into(),
            ),
            rep_group: true,
            provenance: "stem cover of order 64 derived by tails; capable per the 2^5 classification",
        },
        "16#4" => Texts {
            group: "pcgroup G16_4\ngen a b\nord a=4 b=4\nconj b^a = b^3\nend\n".into(),
            covering: Some(
                "pcgroup G16_4cov\ngen a b z\nord a=4 b=4 z=2\npow b = z\nconj b^a = b^3\nend\nkernel z\nquotient G16_4\n"
                    .into(),
            ),
            rep_group: true,
            provenance: "M(Z/4 x| Z/4) = Z/2 (split metacyclic formula); stem cover Z/8 x|3 Z/4",
        },
        "16#11" => Texts {
            group: "pcgroup G16_11\ngen a b w\nord a=2 b=4 w=2\nconj b^a = b^3\nend\n".into(),
            covering: Some(
                "pcgroup G16_11cov\ngen a b w z u v\nord a=2 b=4 w=2 z=2 u=2 v=2\n\
                 pow b = z\nconj b^a = b^3*z\nconj w^a = w*u\nconj w^b = w*v\nend\n\
                 kernel z u v\nquotient G16_11\n"
                    .into(),
            ),
            rep_group: true,
            provenance: "M(D8 x Z/2) = (Z/2)^3 by the direct-product formula",
        },
        "16#12" => Texts {
            group: "pcgroup G16_12\ngen b a z w\nord b=2 a=2 z=2 w=2\npow b = z\npow a = z\nconj a^b = a*z\nend\n"
                .into(),
            covering: Some(
                "pcgroup G16_12cov\ngen b a z w u v\nord b=2 a=2 z=2 w=2 u=2 v=2\n\
                 pow b = z\npow a = z\nconj a^b = a*z\nconj w^b = w*u\nconj w^a = w*v\nend\n\
                 kernel u v\nquotient G16_12\n"
                    .into(),
            ),
            rep_group: true,
            provenance: "M(Q8 x Z/2) = (Z/2)^2 by the direct-product formula",
        },
        "16#13" => Texts {
            // Pauli group D8 o Z/4: x, z of order 2, central c of order 4,
            // [z, x] = c^2
            group: "pcgroup G16_13\ngen x z c\nord x=2 z=2 c=4\nconj z^x = z*c^2\nend\n".into(),
            covering: Some(
                "pcgroup G16_13cov\ngen x z c u v\nord x=2 z=2 c=4 u=2 v=2\n\
                 conj z^x = z*c^2\nconj c^x = c*u\nconj c^z = c*v\nend\n\
                 kernel u v\nquotient G16_13\n"
                    .into(),
            ),
            rep_group: true,
            provenance: "central product D8 o Z/4; stem cover of order 64 derived by tails",
        },
        // ------------------------------------------------------ odd p^3
        "Phi2(21)" => {
            require_odd(p, name)?;
            Texts {
                group: format!(
                    "pcgroup Phi2_21\ngen b a c\nord b={p} a={p} c={p}\npow a = c\nconj a^b = a*c\nend\n"
                ),
                covering: None,
                rep_group: true,
                provenance: "extraspecial of exponent p^2: M = 1 (classical)",
            }
        }
        "Phi2(1^3)" | "H3" => {
            require_odd(p, name)?;
            let m = p.pow(k);
            if k == 1 {
                Texts {
                    group: format!(
                        "pcgroup H3_{p}\ngen x y z\nord x={m} y={m} z={m}\nconj y^x = y*z\nend\n"
                    ),
                    covering: Some(format!(
                        "pcgroup H3star_{p}\ngen x y z z1 z2\nord x={m} y={m} z={m} z1={m} z2={m}\n\
                         conj y^x = y*z\nconj z^x = z*z1\nconj z^y = z*z2\nend\n\
                         kernel z1 z2\nquotient H3_{p}\n"
                    )),
                    rep_group: true,
                    provenance: "Heisenberg representation group with M = (Z/p)^2",
                }
            } else {
                // partial covering reaching one Z/p^k of the multiplier;
                // values computed from it are upper bounds pinned exactly
                // by the closed form
                Texts {
                    group: format!(
                        "pcgroup H3_{p}_{k}\ngen x y z\nord x={m} y={m} z={m}\nconj y^x = y*z\nend\n"
                    ),
                    covering: Some(format!(
                        "pcgroup H3part_{p}_{k}\ngen x y z z1\nord x={m} y={m} z={m} z1={m}\n\
                         conj y^x = y*z\nconj z^x = z*z1\nend\n\
                         kernel z1\nquotient H3_{p}_{k}\n"
                    )),
                    rep_group: false,
                    provenance: "Heisenberg partial covering (one cyclic factor of M = (Z/p^k)^2)",
                }
            }
        }
        // ------------------------------------------------------ p^4, p odd
        "Phi2(31)" => {
            require_odd(p, name)?;
            Texts {
                group: format!(
                    "pcgroup Phi2_31\ngen b a c d\nord b={p} a={p} c={p} d={p}\n\
                     pow a = c\npow c = d\nconj a^b = a*d\nend\n"
                ),
                covering: None,
                rep_group: true,
                provenance: "modular group of order p^4: M = 1 (split metacyclic formula)",
            }
        }
        "Phi2(22)" => {
            require_odd(p, name)?;
            let p2 = p * p;
            Texts {
                group: format!(
                    "pcgroup Phi2_22\ngen x y\nord x={p2} y={p2}\nconj y^x = y^{e}\nend\n",
                    e = 1 + p
                ),
                covering: Some(format!(
                    "pcgroup Phi2_22cov\ngen x y z\nord x={p2} y={p2} z={p}\n\
                     pow y = z\nconj y^x = y^{e}\nend\nkernel z\nquotient Phi2_22\n",
                    e = 1 + p
                )),
                rep_group: true,
                provenance: "M(Z/p^2 x| Z/p^2) = Z/p (split metacyclic formula); cover Z/p^3 x| Z/p^2",
            }
        }
        "Phi2(211)a" => {
            require_odd(p, name)?;
            let p2 = p * p;
            Texts {
                group: format!(
                    "pcgroup Phi2_211a\ngen a b c\nord a={p2} b={p} c={p}\nconj b^a = b*c\nend\n"
                ),
                covering: Some(format!(
                    "pcgroup Phi2_211acov\ngen a b c u v\nord a={p2} b={p} c={p} u={p} v={p}\n\
                     conj b^a = b*c\nconj c^a = c*u\nconj c^b = c*v\nend\n\
                     kernel u v\nquotient Phi2_211a\n"
                )),
                rep_group: true,
                provenance: "stem cover of order p^6 derived by tails; M = (Z/p)^2 claimed",
            }
        }
        "Phi2(211)b" => {
            require_odd(p, name)?;
            let p2 = p * p;
            Texts {
                group: format!(
                    "pcgroup Phi2_211b\ngen x y z\nord x={p} y={p} z={p2}\nconj y^x = y*z^{p}\nend\n"
                ),
                covering: Some(format!(
                    "pcgroup Phi2_211bcov\ngen x y z u v\nord x={p} y={p} z={p2} u={p} v={p}\n\
                     conj y^x = y*z^{p}\nconj z^x = z*u\nconj z^y = z*v\nend\n\
                     kernel u v\nquotient Phi2_211b\n"
                )),
                rep_group: true,
                provenance: "central product H3(p) o Z/p^2; stem cover of order p^6 derived by tails",
            }
        }
        "Phi2(211)c" => {
            require_odd(p, name)?;
            Texts {
                group: format!(
                    "pcgroup Phi2_211c\ngen b a c w\nord b={p} a={p} c={p} w={p}\n\
                     pow a = c\nconj a^b = a*c\nend\n"
                ),
                covering: Some(format!(
                    "pcgroup Phi2_211ccov\ngen b a c w u v\nord b={p} a={p} c={p} w={p} u={p} v={p}\n\
                     pow a = c\nconj a^b = a*c\nconj w^b = w*u\nconj w^a = w*v\nend\n\
                     kernel u v\nquotient Phi2_211c\n"
                )),
                rep_group: true,
                provenance: "Phi2(21) x Z/p; M = (Z/p)^2 by the direct-product formula",
            }
        }
        "Phi2(1^4)" => {
            require_odd(p, name)?;
            Texts {
                group: format!(
                    "pcgroup Phi2_14\ngen x y z w\nord x={p} y={p} z={p} w={p}\nconj y^x = y*z\nend\n"
                ),
                covering: Some(format!(
                    "pcgroup Phi2_14cov\ngen x y z w z1 z2 u v\n\
                     ord x={p} y={p} z={p} w={p} z1={p} z2={p} u={p} v={p}\n\
                     conj y^x = y*z\nconj z^x = z*z1\nconj z^y = z*z2\n\
                     conj w^x = w*u\nconj w^y = w*v\nend\n\
                     kernel z1 z2 u v\nquotient Phi2_14\n"
                )),
                rep_group: true,
                provenance: "H3(p) x Z/p; M = (Z/p)^4 by the direct-product formula; cover of order p^8",
            }
        }
        "Phi3(211)a" => {
            require_odd(p, name)?;
            Texts {
                group: format!(
                    "pcgroup Phi3_211a\ngen a b c d\nord a={p} b={p} c={p} d={p}\n\
                     pow a = d\nconj b^a = b*c\nconj c^a = c*d\nend\n"
                ),
                covering: Some(format!(
                    "pcgroup Phi3_211acov\ngen a b c d v\nord a={p} b={p} c={p} d={p} v={p}\n\
                     pow a = d\n\
                     conj b^a = b*c\nconj c^a = c*d\nconj c^b = c*v\nend\n\
                     kernel v\nquotient Phi3_211a\n"
                )),
                rep_group: true,
                provenance: "M = Z/p: the [c,b]-tail is the only stem direction (tail sweep; no (Z/p)^2 stem exists); tau_irr absence also follows from non-capability",
            }
        }
        "Phi3(211)b1" | "Phi3(211)bnu" => {
            require_odd(p, name)?;
            // at p = 3 the label (1^4) moves to the group with b^3 = d^nu,
            // so the exponent-shape group takes the bnu slot here
            if p == 3 && name.ends_with("bnu") {
                return entry_shape_maxclass_exponent(p);
            }
            let r = if name.ends_with("b1") { 1 } else { nonresidue(p) };
            Texts {
                group: format!(
                    "pcgroup Phi3_211b{r}\ngen a b c d\nord a={p} b={p} c={p} d={p}\n\
                     pow b = d^{r}\nconj b^a = b*c\nconj c^a = c*d\nend\n"
                ),
                covering: Some(format!(
                    "pcgroup Phi3_211b{r}cov\ngen a b c d v\nord a={p} b={p} c={p} d={p} v={p}\n\
                     pow b = d^{r}\n\
                     conj b^a = b*c\nconj c^a = c*d\nconj c^b = c*v\nend\n\
                     kernel v\nquotient Phi3_211b{r}\n"
                )),
                rep_group: true,
                provenance: "M = Z/p: the [c,b]-tail is the only stem direction (tail sweep); tau_irr absence also follows from non-capability",
            }
        }
        "Phi3(1^4)" => {
            require_odd(p, name)?;
            if p == 3 {
                // exceptional p = 3 presentation: the capable maximal-class
                // group of order 81 has b^3 = d^2; its covering below has
                // cyclic centre Z/3 and a faithful 3-dimensional character
                Texts {
                    group: format!(
                        "pcgroup Phi3_14\ngen a b c d\nord a={p} b={p} c={p} d={p}\n\
                         pow b = d^2\nconj b^a = b*c\nconj c^a = c*d\nend\n"
                    ),
                    covering: Some(format!(
                        "pcgroup Phi3_14cov\ngen a b c d v\nord a={p} b={p} c={p} d={p} v={p}\n\
                         pow b = d^2\npow c = v\n\
                         conj b^a = b*c\nconj c^a = c*d\nconj d^a = d*v^2\nend\n\
                         kernel v\nquotient Phi3_14\n"
                    )),
                    rep_group: false,
                    provenance: "exceptional p = 3 form of the capable maximal-class group (tail sweep: it is the only class-3 group of order 81 admitting a covering with cyclic centre); tau = tau_irr = 3 is exact by the p-floor argument",
                }
            } else {
                Texts {
                    group: format!(
                        "pcgroup Phi3_14\ngen a b c d\nord a={p} b={p} c={p} d={p}\n\
                         conj b^a = b*c\nconj c^a = c*d\nend\n"
                    ),
                    covering: Some(format!(
                        "pcgroup Phi3_14cov\ngen a b c d e\nord a={p} b={p} c={p} d={p} e={p}\n\
                         conj b^a = b*c\nconj c^a = c*d\nconj d^a = d*e\nend\n\
                         kernel e\nquotient Phi3_14\n"
                    )),
                    rep_group: false,
                    provenance: "unipotent Jordan action on (Z/p)^3; length-4 Jordan covering (partial; tau = tau_irr = p is exact by the p-floor argument)",
                }
            }
        }
        // ------------------------------------------------- extraspecial 2^5
        "ES32+" | "ES32-" => {
            let minus = name.ends_with('-');
            let pows = if minus { "pow x1 = z\npow x2 = z\n" } else { "" };
            Texts {
                group: format!(
                    "pcgroup {n}\ngen x1 x2 x3 x4 z\nord x1=2 x2=2 x3=2 x4=2 z=2\n{pows}\
                     conj x2^x1 = x2*z\nconj x4^x3 = x4*z\nend\n",
                    n = if minus { "ES32m" } else { "ES32p" },
                ),
                covering: Some(format!(
                    "pcgroup {n}cov\ngen x1 x2 x3 x4 z t1 t2 t3 t4 t5\n\
                     ord x1=2 x2=2 x3=2 x4=2 z=2 t1=2 t2=2 t3=2 t4=2 t5=2\n{pows}\
                     conj x2^x1 = x2*z\nconj x3^x1 = x3*t1\nconj x3^x2 = x3*t2\n\
                     conj x4^x1 = x4*t3\nconj x4^x2 = x4*t4\nconj x4^x3 = x4*z*t5\nend\n\
                     kernel t1 t2 t3 t4 t5\nquotient {n}\n",
                    n = if minus { "ES32m" } else { "ES32p" },
                )),
                rep_group: true,
                provenance: "extraspecial 2^{1+4}; |M| = 2^5 (Schur multipliers of extraspecial 2-groups), stem cover of order 2^10",
            }
        }
        // ------------------------------------------------------ p^5 entries
        "Phi9(1^5)" => {
            require_prime(p)?;
            require_odd(p, name)?;
            Texts {
                group: format!(
                    "pcgroup Phi9_15\ngen a b1 b2 b3 b4\nord a={p} b1={p} b2={p} b3={p} b4={p}\n\
                     conj b1^a = b1*b2\nconj b2^a = b2*b3\nconj b3^a = b3*b4\nend\n"
                ),
                covering: Some(format!(
                    "pcgroup Phi9_15cov\ngen a b1 b2 b3 b4 b5\n\
                     ord a={p} b1={p} b2={p} b3={p} b4={p} b5={p}\n\
                     conj b1^a = b1*b2\nconj b2^a = b2*b3\nconj b3^a = b3*b4\nconj b4^a = b4*b5\nend\n\
                     kernel b5\nquotient Phi9_15\n"
                )),
                rep_group: false,
                provenance: "unipotent Jordan action on (Z/p)^4; covering by the length-5 Jordan group (tau = tau_irr = p exact by the p-floor argument)",
            }
        }
        "Phi2(221)c" => {
            require_odd(p, name)?;
            let p2 = p * p;
            Texts {
                group: format!(
                    "pcgroup Phi2_221c\ngen al a1 ga a2\nord al={p2} a1={p} ga={p} a2={p}\n\
                     pow ga = a2\nconj a1^al = a1*a2\nend\n"
                ),
                covering: Some(format!(
                    "pcgroup Phi2_221ccov\ngen al a1 ga a2 g1 g2\n\
                     ord al={p2} a1={p} ga={p} a2={p} g1={p} g2={p2}\n\
                     pow ga = a2\nconj a1^al = a1*a2\nconj ga^a1 = ga*g1\nconj ga^al = ga*g2\n\
                     conj a2^al = a2*g2^{p}\nend\n\
                     kernel g1 g2\nquotient Phi2_221c\n"
                )),
                rep_group: true,
                provenance: "transcribed representation group of order p^8 (kernel Z/p x Z/p^2)",
            }
        }
        "Phi4(221)f0" | "Phi4(221)dhalf" => {
            require_prime(p)?;
            if p < 5 {
                return Err(Error::Invalid(format!("`{name}` needs p >= 5")));
            }
            let p2 = p * p;
            let f0 = name.ends_with("f0");
            let nu = nonresidue(p);
            // modular inverse of nu mod p
            let mut inv = 1;
            while (nu * inv) % p != 1 {
                inv += 1;
            }
            let (pows, tag) = if f0 {
                (format!("pow a1 = b2\npow a2 = b1^{nu}\n"), "f0")
            } else {
                (format!("pow a1 = b1^{}\npow a2 = b2\n", p - 1), "dhalf")
            };
            // conjugation of the beta generators induced by the power
            // relations hitting them: [a1^p, a2] = ga^p etc.
            let extra = if f0 {
                format!(
                    "conj b1^a1 = b1*ga^{e1}\nconj b2^a2 = b2*ga^{e2}\n",
                    e1 = p2 - p * inv % p2,
                    e2 = p
                )
            } else {
                format!(
                    "conj b1^a2 = b1*ga^{e}\nconj b2^a1 = b2*ga^{e}\n",
                    e = p2 - p
                )
            };
            Texts {
                group: format!(
                    "pcgroup Phi4_221{tag}\ngen al a1 a2 b1 b2\nord al={p} a1={p} a2={p} b1={p} b2={p}\n\
                     {pows}conj a1^al = a1*b1\nconj a2^al = a2*b2\nend\n"
                ),
                covering: Some(format!(
                    "pcgroup Phi4_221{tag}cov\ngen al a1 a2 b1 b2 ga\n\
                     ord al={p} a1={p} a2={p} b1={p} b2={p} ga={p2}\n\
                     {pows}conj a1^al = a1*b1\nconj a2^al = a2*b2\n\
                     conj a2^a1 = a2*ga^{gm1}\n{extra}end\n\
                     kernel ga\nquotient Phi4_221{tag}\n",
                    gm1 = p2 - 1
                )),
                rep_group: true,
                provenance: "transcribed representation group of order p^7 (kernel Z/p^2)",
            }
        }
        "Phi6(1^5)" => {
            require_prime(p)?;
            if p < 5 {
                return Err(Error::Invalid("Phi6(1^5) needs p >= 5".into()));
            }
            Texts {
                group: format!(
                    "pcgroup Phi6_15\ngen a1 a2 b b1 b2\nord a1={p} a2={p} b={p} b1={p} b2={p}\n\
                     conj a2^a1 = a2*b\nconj b^a1 = b*b1\nconj b^a2 = b*b2\nend\n"
                ),
                covering: Some(format!(
                    "pcgroup Phi6_15cov\ngen a1 a2 b b1 b2 b3 b4 g\n\
                     ord a1={p} a2={p} b={p} b1={p} b2={p} b3={p} b4={p} g={p}\n\
                     conj a2^a1 = a2*b\nconj b^a1 = b*b1\nconj b^a2 = b*b2\n\
                     conj b2^a2 = b2*b3\nconj b1^a1 = b1*b4\nconj b1^a2 = b1*g\nconj b2^a1 = b2*g\nend\n\
                     kernel b3 b4 g\nquotient Phi6_15\n"
                )),
                rep_group: true,
                provenance: "transcribed representation group of order p^8 (kernel (Z/p)^3)",
            }
        }
        "Phi10(1^5)" => {
            require_prime(p)?;
            if p < 5 {
                return Err(Error::Invalid("Phi10(1^5) needs p >= 5".into()));
            }
            let q = p - 1;
            Texts {
                group: format!(
                    "pcgroup Phi10_15\ngen al a1 a2 a3 a4\nord al={p} a1={p} a2={p} a3={p} a4={p}\n\
                     conj a1^al = a1*a2\nconj a2^al = a2*a3\nconj a3^al = a3*a4\n\
                     conj a2^a1 = a2*a4^{q}\nend\n"
                ),
                covering: Some(format!(
                    "pcgroup Phi10_15cov\ngen al a1 a2 a3 a4 b1 b2 b3\n\
                     ord al={p} a1={p} a2={p} a3={p} a4={p} b1={p} b2={p} b3={p}\n\
                     conj a1^al = a1*a2\nconj a2^al = a2*a3\nconj a3^al = a3*a4\nconj a4^al = a4*b1\n\
                     conj a2^a1 = a2*a4^{q}*b3^{q}\nconj a3^a1 = a3*b1^{q}*b2^{q}\nconj a4^a1 = a4*b2^{q}\n\
                     conj a3^a2 = a3*b2\nend\n\
                     kernel b1 b2 b3\nquotient Phi10_15\n"
                )),
                rep_group: true,
                provenance: "transcribed representation group of order p^8 (kernel (Z/p)^3)",
            }
        }
        "Phi6(2111)a" => {
            require_prime(p)?;
            if p < 5 {
                return Err(Error::Invalid("Phi6(2111)a needs p >= 5".into()));
            }
            Texts {
                group: format!(
                    "pcgroup Phi6_2111a\ngen a1 a2 b b1 b2\nord a1={p} a2={p} b={p} b1={p} b2={p}\n\
                     pow a1 = b1\nconj a2^a1 = a2*b\nconj b^a1 = b*b1\nconj b^a2 = b*b2\nend\n"
                ),
                covering: Some(format!(
                    "pcgroup Phi6_2111acov\ngen a1 a2 b b1 b2 b3\n\
                     ord a1={p} a2={p} b={p} b1={p} b2={p} b3={p}\n\
                     pow a1 = b1\nconj a2^a1 = a2*b\nconj b^a1 = b*b1\nconj b^a2 = b*b2\n\
                     conj b2^a2 = b2*b3\nend\n\
                     kernel b3\nquotient Phi6_2111a\n"
                )),
                rep_group: true,
                provenance: "transcribed representation group of order p^6 (kernel Z/p)",
            }
        }
        _ => return Err(Error::UnknownCatalogEntry(name.to_string())),
    };
    Ok(t)
}

/// Instantiate a catalog entry. A trailing `-star` is accepted as an alias
/// for the entry itself (its covering is the starred object).
pub fn catalog_get(name: &str, params: &Params, cfg: &Config) -> Result<CatalogEntry> {
    let name = name.strip_suffix("-star").unwrap_or(name);
    if matches!(
        name,
        "D8" | "Q8" | "D16" | "Q16" | "SD16" | "M16"
    ) || name.starts_with("16#")
        || name.starts_with("ES32")
    {
        no_params(name, params, 2)?;
    }
    require_prime(params.p.max(2))?;
    let t = entry_texts(name, params)?;
    let group = parse_presentation(&t.group, cfg)?;
    let covering = match &t.covering {
        Some(text) => Some(parse_covering(text, cfg)?),
        None => None,
    };
    Ok(CatalogEntry {
        name: name.to_string(),
        group,
        covering,
        is_representation_group: t.rep_group,
        provenance: t.provenance.to_string(),
    })
}

/// Names the catalog knows, for `projembed catalog`.
pub fn catalog_names() -> Vec<&'static str> {
    vec![
        "D8", "Q8", "D16", "Q16", "SD16", "M16", "16#3", "16#4", "16#11", "16#12", "16#13",
        "Phi2(21)", "Phi2(1^3)", "H3",
        "Phi2(31)", "Phi2(22)", "Phi2(211)a", "Phi2(211)b", "Phi2(211)c", "Phi2(1^4)",
        "Phi3(211)a", "Phi3(211)b1", "Phi3(211)bnu", "Phi3(1^4)",
        "ES32+", "ES32-",
        "Phi9(1^5)", "Phi2(221)c", "Phi6(2111)a",
        "Phi4(221)f0", "Phi4(221)dhalf", "Phi6(1^5)", "Phi10(1^5)",
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> Config {
        Config::default()
    }

    /// Structural fingerprint used to validate transcriptions before any
    /// character theory runs.
    fn fingerprint(g: &Group) -> (usize, usize, usize, usize) {
        (
            g.order(),
            g.center().order(),
            g.derived_subgroup().order(),
            g.conjugacy_classes().num_classes(),
        )
    }

    #[test]
    fn all_entries_validate_structurally() {
        let c = cfg();
        for name in catalog_names() {
            let needs_five = name.contains("1^5")
                || name == "Phi6(2111)a"
                || name.starts_with("Phi4(221)");
            let params = if needs_five {
                Params { p: 5, k: 1 }
            } else {
                Params { p: 3, k: 1 }
            };
            let e = catalog_get(name, &params, &c).unwrap_or_else(|err| {
                panic!("catalog_get({name}) failed: {err}");
            });
            // consistency of both presentations, always
            assert!(
                crate::presentation::check_consistency(&e.group).passed(),
                "{name}: group presentation inconsistent"
            );
            if let Some(spec) = &e.covering {
                assert!(
                    crate::presentation::check_consistency(&spec.gstar).passed(),
                    "{name}: covering presentation inconsistent"
                );
                // deep structural checks need full enumeration; cap the size
                if spec.gstar.order() > 100_000 {
                    continue;
                }
            }
            let g = e.build_group(&c).unwrap_or_else(|err| {
                panic!("group for {name} failed to build: {err}");
            });
            assert!(g.order() > 1, "{name}");
            let cov = e.load_covering(&c).unwrap_or_else(|err| {
                panic!("covering for {name} failed: {err}");
            });
            assert_eq!(
                cov.group.order(),
                g.order(),
                "{name}: quotient order must equal group order"
            );
            assert_eq!(
                cov.gstar.order(),
                g.order() * cov.kernel_order,
                "{name}: |G*| = |G| |A|"
            );
            // the quotient presentation equals the catalog presentation up
            // to names: same orders, same structure fingerprint
            let qf = fingerprint(&cov.group);
            let gf = fingerprint(&g);
            assert_eq!(qf, gf, "{name}: quotient differs from base group");
        }
    }

    #[test]
    fn catalog_rejects_bad_params() {
        assert!(catalog_get("D8", &Params { p: 5, k: 1 }, &cfg()).is_err());
        assert!(catalog_get("Phi2(21)", &Params { p: 2, k: 1 }, &cfg()).is_err());
        assert!(catalog_get("nonsense", &Params::default(), &cfg()).is_err());
    }

    #[test]
    fn structure_spot_checks() {
        let c = cfg();
        // Phi2(31) at p=3: modular group of order 81, cyclic center of order 9
        let e = catalog_get("Phi2(31)", &Params { p: 3, k: 1 }, &c).unwrap();
        let g = e.build_group(&c).unwrap();
        assert_eq!(g.order(), 81);
        assert_eq!(g.center().order(), 9);
        assert_eq!(g.derived_subgroup().order(), 3);
        // Phi2(22): center (Z/3)^2
        let e = catalog_get("Phi2(22)", &Params { p: 3, k: 1 }, &c).unwrap();
        let g = e.build_group(&c).unwrap();
        assert_eq!(g.order(), 81);
        assert_eq!(g.center().order(), 9);
        // Phi2(211)b: cyclic center of order 9
        let e = catalog_get("Phi2(211)b", &Params { p: 3, k: 1 }, &c).unwrap();
        let g = e.build_group(&c).unwrap();
        let z = g.center();
        assert_eq!(z.order(), 9);
        let max_ord = z.elems.iter().map(|&x| g.element_order(x)).max().unwrap();
        assert_eq!(max_ord, 9, "center must be cyclic of order 9");
        // Phi3(211)a: center Z/3, class 3
        let e = catalog_get("Phi3(211)a", &Params { p: 3, k: 1 }, &c).unwrap();
        let g = e.build_group(&c).unwrap();
        assert_eq!(g.center().order(), 3);
        assert_eq!(g.derived_subgroup().order(), 9);
        // extraspecial 2^5
        for n in ["ES32+", "ES32-"] {
            let e = catalog_get(n, &Params { p: 2, k: 1 }, &c).unwrap();
            let g = e.build_group(&c).unwrap();
            assert_eq!(g.order(), 32);
            assert_eq!(g.center().order(), 2);
            assert_eq!(g.derived_subgroup().order(), 2);
        }
        // ES32+ and ES32- are not isomorphic: element-order profiles differ
        let ep = catalog_get("ES32+", &Params { p: 2, k: 1 }, &c).unwrap();
        let em = catalog_get("ES32-", &Params { p: 2, k: 1 }, &c).unwrap();
        let gp = ep.build_group(&c).unwrap();
        let gm = em.build_group(&c).unwrap();
        let count4 = |g: &Group| (0..g.order() as u32).filter(|&x| g.element_order(x) == 4).count();
        assert_ne!(count4(&gp), count4(&gm));
    }

    #[test]
    fn heisenberg_k2_partial_covering_loads() {
        let c = cfg();
        let e = catalog_get("H3", &Params { p: 3, k: 2 }, &c).unwrap();
        let cov = e.load_covering(&c).unwrap();
        assert_eq!(cov.gstar.order(), 6561);
        assert_eq!(cov.group.order(), 729);
        assert!(!cov.is_representation_group);
        assert!(cov.is_stem);
    }
}
