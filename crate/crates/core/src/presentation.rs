//! Power-commutator presentations: parsing, validation, consistency checks.
//!
//! Grammar (line oriented, `#` starts a comment):
//!
//! ```text
//! pcgroup NAME
//! gen g1 g2 ... gn
//! ord g1=e1 g2=e2 ... gn=en
//! pow gi = WORD          # right-hand side of gi^{ei}; omitted means 1
//! conj gj^gi = WORD      # gi^-1 gj gi, j > i; omitted means gj
//! comm [gj,gi] = WORD    # sugar for conj gj^gi = gj*WORD
//! end
//! ```
//!
//! `WORD ::= 1 | term (* term)*`, `term ::= gen (^ integer)?`. A covering
//! file is a `pcgroup` block followed by `kernel gk ... gn` and
//! `quotient NAME`.

use crate::config::Config;
use crate::error::{Error, Result};
use crate::word::NormalWord;

/// A validated (but not necessarily consistent) power-commutator
/// presentation. Generator `i` has relative order `rel_orders[i]`;
/// `power_rels[i]` is the normal word equal to g_i^{e_i} and uses only
/// generators of index > i; `conj(i, j)` for j > i is the normal word equal
/// to g_i^{-1} g_j g_i and uses only generators of index > i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcPresentation {
    pub name: String,
    pub gens: Vec<String>,
    pub rel_orders: Vec<u32>,
    pub power_rels: Vec<NormalWord>,
    conj_rels: Vec<Vec<Option<NormalWord>>>,
}

impl PcPresentation {
    /// Build a presentation programmatically; relations are validated the
    /// same way as parsed input.
    pub fn new(
        name: impl Into<String>,
        gens: Vec<String>,
        rel_orders: Vec<u32>,
        power_rels: Vec<(usize, NormalWord)>,
        conj_rels: Vec<(usize, usize, NormalWord)>,
        cfg: &Config,
    ) -> Result<Self> {
        let n = gens.len();
        let mut p = PcPresentation {
            name: name.into(),
            gens,
            rel_orders,
            power_rels: (0..n).map(|_| NormalWord::identity(n)).collect(),
            conj_rels: vec![vec![None; n]; n],
        };
        p.validate_basics(cfg)?;
        for (i, w) in power_rels {
            p.set_power(i, w)?;
        }
        for (i, j, w) in conj_rels {
            p.set_conj(i, j, w)?;
        }
        Ok(p)
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    /// Group order as the product of relative orders (valid once the
    /// presentation passes the consistency tests).
    pub fn order(&self) -> u128 {
        self.rel_orders.iter().map(|&e| e as u128).product()
    }

    /// The stored conjugate g_j^{g_i} for i < j; `None` encodes the trivial
    /// relation g_j^{g_i} = g_j.
    pub fn conj(&self, i: usize, j: usize) -> Option<&NormalWord> {
        self.conj_rels[i][j].as_ref()
    }

    fn validate_basics(&self, cfg: &Config) -> Result<()> {
        let n = self.gens.len();
        if self.rel_orders.len() != n {
            return Err(Error::Invalid("ord list does not match gen list".into()));
        }
        for (i, g) in self.gens.iter().enumerate() {
            if self.gens[..i].contains(g) {
                return Err(Error::Invalid(format!("duplicate generator `{g}`")));
            }
        }
        if let Some(&e) = self.rel_orders.iter().find(|&&e| e < 2) {
            return Err(Error::Invalid(format!("relative order {e} < 2")));
        }
        let order: u128 = self.order();
        if order > cfg.max_order {
            return Err(Error::OrderBound {
                order,
                bound: cfg.max_order,
            });
        }
        Ok(())
    }

    fn check_word(&self, w: &NormalWord, min_index_exclusive: usize) -> Result<()> {
        if w.len() != self.gens.len() {
            return Err(Error::Invalid("word length mismatch".into()));
        }
        for (g, x) in w.letters() {
            if g <= min_index_exclusive {
                return Err(Error::Invalid(format!(
                    "ill-ordered relation: `{}` referenced, only generators after `{}` allowed",
                    self.gens[g], self.gens[min_index_exclusive]
                )));
            }
            if x >= self.rel_orders[g] {
                return Err(Error::Invalid(format!(
                    "exponent {x} out of range for `{}`",
                    self.gens[g]
                )));
            }
        }
        Ok(())
    }

    fn set_power(&mut self, i: usize, w: NormalWord) -> Result<()> {
        self.check_word(&w, i)?;
        self.power_rels[i] = w;
        Ok(())
    }

    fn set_conj(&mut self, i: usize, j: usize, w: NormalWord) -> Result<()> {
        if j <= i {
            return Err(Error::Invalid(format!(
                "conjugation g{}^g{} must have j > i",
                j + 1,
                i + 1
            )));
        }
        self.check_word(&w, i)?;
        self.conj_rels[i][j] = Some(w);
        Ok(())
    }

    /// Serialize back to the presentation grammar. Reparsing the output
    /// yields an identical structure.
    pub fn pretty_print(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("pcgroup {}\n", self.name));
        out.push_str("gen");
        for g in &self.gens {
            out.push_str(&format!(" {g}"));
        }
        out.push('\n');
        out.push_str("ord");
        for (g, e) in self.gens.iter().zip(&self.rel_orders) {
            out.push_str(&format!(" {g}={e}"));
        }
        out.push('\n');
        for (i, w) in self.power_rels.iter().enumerate() {
            if !w.is_identity() {
                out.push_str(&format!("pow {} = {}\n", self.gens[i], self.word_str(w)));
            }
        }
        for i in 0..self.gens.len() {
            for j in i + 1..self.gens.len() {
                if let Some(w) = self.conj(i, j) {
                    out.push_str(&format!(
                        "conj {}^{} = {}\n",
                        self.gens[j],
                        self.gens[i],
                        self.word_str(w)
                    ));
                }
            }
        }
        out.push_str("end\n");
        out
    }

    pub fn word_str(&self, w: &NormalWord) -> String {
        if w.is_identity() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (g, x) in w.letters() {
            if x == 1 {
                parts.push(self.gens[g].clone());
            } else {
                parts.push(format!("{}^{}", self.gens[g], x));
            }
        }
        parts.join("*")
    }
}

/// A covering specification: a presentation of G*, a kernel that must be a
/// contiguous suffix of the pc chain, and the name of the quotient group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringSpec {
    pub gstar: PcPresentation,
    /// Index of the first kernel generator; the kernel is generated by the
    /// suffix gens[kernel_start..].
    pub kernel_start: usize,
    pub label: String,
}

impl CoveringSpec {
    pub fn new(gstar: PcPresentation, kernel_start: usize, label: impl Into<String>) -> Result<Self> {
        if kernel_start >= gstar.num_gens() {
            return Err(Error::Covering("kernel must be nonempty".into()));
        }
        Ok(CoveringSpec {
            gstar,
            kernel_start,
            label: label.into(),
        })
    }

    pub fn kernel_gens(&self) -> &[String] {
        &self.gstar.gens[self.kernel_start..]
    }
}

struct Line<'a> {
    no: usize,
    text: &'a str,
}

fn logical_lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .map(|(no, l)| {
            let body = match l.find('#') {
                Some(p) => &l[..p],
                None => l,
            };
            Line {
                no: no + 1,
                text: body.trim(),
            }
        })
        .filter(|l| !l.text.is_empty())
        .collect()
}

fn perr<T>(line: usize, col: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        col,
        msg: msg.into(),
    })
}

struct WordBuilder<'a> {
    gens: &'a [String],
    rel_orders: &'a [u32],
}

impl<'a> WordBuilder<'a> {
    fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g == name)
    }

    /// Parse `1` or `term (* term)*` into an exponent vector. Repeated
    /// occurrences of a generator must appear in chain order so the result
    /// is a normal word.
    fn parse(&self, s: &str, line: usize) -> Result<NormalWord> {
        let s = s.trim();
        let n = self.gens.len();
        if s == "1" {
            return Ok(NormalWord::identity(n));
        }
        let mut v = vec![0u32; n];
        let mut last: Option<usize> = None;
        for term in s.split('*') {
            let term = term.trim();
            if term.is_empty() {
                return perr(line, 0, "empty term in word");
            }
            let (name, exp) = match term.split_once('^') {
                Some((g, e)) => {
                    let exp: i64 = e
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse {
                            line,
                            col: 0,
                            msg: format!("bad exponent `{e}`"),
                        })?;
                    (g.trim(), exp)
                }
                None => (term, 1),
            };
            let g = match self.gen_index(name) {
                Some(g) => g,
                None => return perr(line, 0, format!("unknown generator `{name}`")),
            };
            if let Some(prev) = last {
                if g <= prev {
                    return perr(
                        line,
                        0,
                        format!("word not in normal order at `{name}`"),
                    );
                }
            }
            last = Some(g);
            let e = self.rel_orders[g] as i64;
            if exp < 0 || exp >= e {
                return perr(
                    line,
                    0,
                    format!("exponent {exp} out of range [0,{}) for `{name}`", e),
                );
            }
            v[g] = exp as u32;
        }
        Ok(NormalWord(v))
    }
}

enum Parsed {
    Group(PcPresentation),
    Covering(CoveringSpec),
}

fn parse_block(text: &str, cfg: &Config) -> Result<Parsed> {
    let lines = logical_lines(text);
    let mut it = lines.iter().peekable();

    let head = match it.next() {
        Some(l) => l,
        None => return perr(1, 1, "empty input"),
    };
    let name = match head.text.strip_prefix("pcgroup") {
        Some(rest) if !rest.trim().is_empty() => rest.trim().to_string(),
        _ => return perr(head.no, 1, "expected `pcgroup NAME`"),
    };

    let gen_line = match it.next() {
        Some(l) if l.text.starts_with("gen ") || l.text == "gen" => l,
        Some(l) => return perr(l.no, 1, "expected `gen ...`"),
        None => return perr(head.no + 1, 1, "expected `gen ...`"),
    };
    let gens: Vec<String> = gen_line.text["gen".len()..]
        .split_whitespace()
        .map(|s| s.to_string())
        .collect();
    if gens.is_empty() {
        return perr(gen_line.no, 1, "at least one generator required");
    }
    for (i, g) in gens.iter().enumerate() {
        if gens[..i].contains(g) {
            return perr(gen_line.no, 1, format!("duplicate generator `{g}`"));
        }
    }

    let ord_line = match it.next() {
        Some(l) if l.text.starts_with("ord ") => l,
        Some(l) => return perr(l.no, 1, "expected `ord ...`"),
        None => return perr(gen_line.no + 1, 1, "expected `ord ...`"),
    };
    let mut rel_orders = vec![0u32; gens.len()];
    let mut seen = vec![false; gens.len()];
    for item in ord_line.text["ord".len()..].split_whitespace() {
        let (g, e) = match item.split_once('=') {
            Some(p) => p,
            None => return perr(ord_line.no, 1, format!("expected `gen=order`, got `{item}`")),
        };
        let gi = match gens.iter().position(|x| x == g) {
            Some(gi) => gi,
            None => return perr(ord_line.no, 1, format!("unknown generator `{g}`")),
        };
        let e: u32 = match e.parse() {
            Ok(e) if e >= 2 => e,
            _ => return perr(ord_line.no, 1, format!("relative order of `{g}` must be >= 2")),
        };
        rel_orders[gi] = e;
        seen[gi] = true;
    }
    if let Some(miss) = seen.iter().position(|&s| !s) {
        return perr(
            ord_line.no,
            1,
            format!("missing relative order for `{}`", gens[miss]),
        );
    }

    let mut p = PcPresentation {
        name,
        gens,
        rel_orders,
        power_rels: Vec::new(),
        conj_rels: Vec::new(),
    };
    let n = p.gens.len();
    p.power_rels = (0..n).map(|_| NormalWord::identity(n)).collect();
    p.conj_rels = vec![vec![None; n]; n];
    p.validate_basics(cfg)
        .map_err(|e| parse_wrap(e, ord_line.no))?;

    let wb = WordBuilder {
        gens: &p.gens,
        rel_orders: &p.rel_orders,
    };

    let mut ended = false;
    let mut kernel_start: Option<usize> = None;
    let mut quotient: Option<String> = None;
    let mut pending: Vec<(bool, usize, usize, NormalWord, usize)> = Vec::new();

    for l in it {
        if !ended {
            if l.text == "end" {
                ended = true;
                continue;
            }
            if let Some(rest) = l.text.strip_prefix("pow ") {
                let (lhs, rhs) = split_eq(rest, l.no)?;
                let g = match wb.gen_index(lhs.trim()) {
                    Some(g) => g,
                    None => return perr(l.no, 1, format!("unknown generator `{}`", lhs.trim())),
                };
                let w = wb.parse(rhs, l.no)?;
                pending.push((false, g, g, w, l.no));
            } else if let Some(rest) = l.text.strip_prefix("conj ") {
                let (lhs, rhs) = split_eq(rest, l.no)?;
                let (ju, iu) = match lhs.trim().split_once('^') {
                    Some((a, b)) => (a.trim(), b.trim()),
                    None => return perr(l.no, 1, "expected `conj gj^gi = WORD`"),
                };
                let j = wb
                    .gen_index(ju)
                    .ok_or_else(|| parse_unknown(ju, l.no))?;
                let i = wb
                    .gen_index(iu)
                    .ok_or_else(|| parse_unknown(iu, l.no))?;
                let w = wb.parse(rhs, l.no)?;
                pending.push((true, i, j, w, l.no));
            } else if let Some(rest) = l.text.strip_prefix("comm ") {
                let (lhs, rhs) = split_eq(rest, l.no)?;
                let inner = lhs
                    .trim()
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or_else(|| Error::Parse {
                        line: l.no,
                        col: 1,
                        msg: "expected `comm [gj,gi] = WORD`".into(),
                    })?;
                let (ju, iu) = match inner.split_once(',') {
                    Some((a, b)) => (a.trim(), b.trim()),
                    None => return perr(l.no, 1, "expected `comm [gj,gi] = WORD`"),
                };
                let j = wb
                    .gen_index(ju)
                    .ok_or_else(|| parse_unknown(ju, l.no))?;
                let i = wb
                    .gen_index(iu)
                    .ok_or_else(|| parse_unknown(iu, l.no))?;
                let w = wb.parse(rhs, l.no)?;
                // [gj,gi] = w  rewrites to  gj^gi = gj * w.
                let mut v = w.0.clone();
                if v[j] + 1 >= p.rel_orders[j] {
                    return perr(l.no, 1, "commutator word overflows the base generator");
                }
                v[j] += 1;
                for (g, _) in w.letters() {
                    if g < j && g != j {
                        if g <= i {
                            return perr(l.no, 1, "ill-ordered commutator word");
                        }
                        if g < j {
                            return perr(
                                l.no,
                                1,
                                "commutator word must use generators at or after the base",
                            );
                        }
                    }
                }
                pending.push((true, i, j, NormalWord(v), l.no));
            } else {
                return perr(l.no, 1, format!("unrecognized directive `{}`", l.text));
            }
        } else if let Some(rest) = l.text.strip_prefix("kernel") {
            let names: Vec<&str> = rest.split_whitespace().collect();
            if names.is_empty() {
                return perr(l.no, 1, "kernel requires at least one generator");
            }
            let mut idx = Vec::new();
            for nm in &names {
                let g = wb.gen_index(nm).ok_or_else(|| parse_unknown(nm, l.no))?;
                idx.push(g);
            }
            idx.sort_unstable();
            let start = idx[0];
            let expect: Vec<usize> = (start..p.gens.len()).collect();
            if idx != expect {
                return perr(l.no, 1, "kernel must be a contiguous suffix of the pc chain");
            }
            kernel_start = Some(start);
        } else if let Some(rest) = l.text.strip_prefix("quotient") {
            let q = rest.trim();
            if q.is_empty() {
                return perr(l.no, 1, "quotient requires a name");
            }
            quotient = Some(q.to_string());
        } else {
            return perr(l.no, 1, format!("unexpected content after `end`: `{}`", l.text));
        }
    }
    if !ended {
        return perr(lines.last().map(|l| l.no).unwrap_or(1), 1, "missing `end`");
    }

    for (is_conj, i, j, w, no) in pending {
        let r = if is_conj {
            p.set_conj(i, j, w)
        } else {
            p.set_power(i, w)
        };
        r.map_err(|e| parse_wrap(e, no))?;
    }

    match (kernel_start, quotient) {
        (None, None) => Ok(Parsed::Group(p)),
        (Some(k), Some(q)) => Ok(Parsed::Covering(CoveringSpec {
            gstar: p,
            kernel_start: k,
            label: q,
        })),
        (Some(_), None) => perr(1, 1, "covering has `kernel` but no `quotient`"),
        (None, Some(_)) => perr(1, 1, "covering has `quotient` but no `kernel`"),
    }
}

fn parse_unknown(name: &str, line: usize) -> Error {
    Error::Parse {
        line,
        col: 1,
        msg: format!("unknown generator `{name}`"),
    }
}

fn parse_wrap(e: Error, line: usize) -> Error {
    match e {
        Error::Parse { .. } | Error::OrderBound { .. } => e,
        other => Error::Parse {
            line,
            col: 1,
            msg: other.to_string(),
        },
    }
}

fn split_eq(s: &str, line: usize) -> Result<(&str, &str)> {
    match s.split_once('=') {
        Some((l, r)) => Ok((l, r)),
        None => perr(line, 1, "expected `=`"),
    }
}

/// Parse a `pcgroup ... end` block.
pub fn parse_presentation(text: &str, cfg: &Config) -> Result<PcPresentation> {
    match parse_block(text, cfg)? {
        Parsed::Group(p) => Ok(p),
        Parsed::Covering(_) => Err(Error::Invalid(
            "expected a plain presentation, found a covering".into(),
        )),
    }
}

/// Parse a covering: a `pcgroup` block followed by `kernel` and `quotient`.
pub fn parse_covering(text: &str, cfg: &Config) -> Result<CoveringSpec> {
    match parse_block(text, cfg)? {
        Parsed::Group(_) => Err(Error::Invalid(
            "expected a covering (missing `kernel`/`quotient`)".into(),
        )),
        Parsed::Covering(c) => Ok(c),
    }
}

/// One overlap test of the consistency check.
#[derive(Debug, Clone)]
pub struct OverlapCheck {
    pub description: String,
    pub pass: bool,
    pub lhs: NormalWord,
    pub rhs: NormalWord,
}

#[derive(Debug, Clone)]
pub struct ConsistencyReport {
    pub checks: Vec<OverlapCheck>,
    pub order: u128,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&OverlapCheck> {
        self.checks.iter().find(|c| !c.pass)
    }
}

/// Run the standard pc-presentation overlap tests. All tests passing
/// implies the normal forms are unique, so |G| equals the product of the
/// relative orders.
pub fn check_consistency(p: &PcPresentation) -> ConsistencyReport {
    let col = crate::group::Collector::new(p);
    let n = p.num_gens();
    let mut checks = Vec::new();
    let gen = |i: usize| NormalWord::generator(n, i);
    let pow = |i: usize, e: u32| {
        let mut v = vec![0u32; n];
        v[i] = e;
        NormalWord(v)
    };

    // g_k (g_j g_i) = (g_k g_j) g_i for k > j > i
    for k in 0..n {
        for j in 0..k {
            for i in 0..j {
                let lhs = col.mul(&gen(k), &col.mul(&gen(j), &gen(i)));
                let rhs = col.mul(&col.mul(&gen(k), &gen(j)), &gen(i));
                checks.push(OverlapCheck {
                    description: format!(
                        "assoc ({},{},{})",
                        p.gens[k], p.gens[j], p.gens[i]
                    ),
                    pass: lhs == rhs,
                    lhs,
                    rhs,
                });
            }
        }
    }
    // (g_j^{e_j}) g_i = g_j^{e_j - 1} (g_j g_i) for j > i
    for j in 0..n {
        for i in 0..j {
            let ej = p.rel_orders[j];
            let lhs = col.mul(&col.pow_rel(j), &gen(i));
            let rhs = col.mul(&pow(j, ej - 1), &col.mul(&gen(j), &gen(i)));
            checks.push(OverlapCheck {
                description: format!("power-overlap {}^{} * {}", p.gens[j], ej, p.gens[i]),
                pass: lhs == rhs,
                lhs,
                rhs,
            });
        }
    }
    // g_j (g_i^{e_i}) = (g_j g_i) g_i^{e_i - 1} for j > i
    for j in 0..n {
        for i in 0..j {
            let ei = p.rel_orders[i];
            let lhs = col.mul(&gen(j), &col.pow_rel(i));
            let rhs = col.mul(&col.mul(&gen(j), &gen(i)), &pow(i, ei - 1));
            checks.push(OverlapCheck {
                description: format!("power-overlap {} * {}^{}", p.gens[j], p.gens[i], ei),
                pass: lhs == rhs,
                lhs,
                rhs,
            });
        }
    }
    // g_i (g_i^{e_i}) = (g_i^{e_i}) g_i
    for i in 0..n {
        let lhs = col.mul(&gen(i), &col.pow_rel(i));
        let rhs = col.mul(&col.pow_rel(i), &gen(i));
        checks.push(OverlapCheck {
            description: format!("power-overlap {}^{}", p.gens[i], p.rel_orders[i] + 1),
            pass: lhs == rhs,
            lhs,
            rhs,
        });
    }

    ConsistencyReport {
        checks,
        order: p.order(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn parses_cyclic_of_order_two() {
        let p = parse_presentation("pcgroup C2\ngen a\nord a=2\nend\n", &cfg()).unwrap();
        assert_eq!(p.num_gens(), 1);
        assert_eq!(p.rel_orders, vec![2]);
        assert!(p.power_rels[0].is_identity());
        let rep = check_consistency(&p);
        assert!(rep.passed());
        assert_eq!(rep.order, 2);
    }

    #[test]
    fn parses_heisenberg_with_comm_sugar() {
        let text = "# Heisenberg over Z/3\npcgroup H3\ngen x y z\nord x=3 y=3 z=3\ncomm [y,x] = z\nend\n";
        let p = parse_presentation(text, &cfg()).unwrap();
        assert_eq!(p.num_gens(), 3);
        assert_eq!(p.rel_orders, vec![3, 3, 3]);
        // y^x = y*z
        let w = p.conj(0, 1).unwrap();
        assert_eq!(w.0, vec![0, 1, 1]);
        assert!(check_consistency(&p).passed());
    }

    #[test]
    fn rejects_earlier_generator_on_rhs() {
        let text = "pcgroup bad\ngen a b\nord a=2 b=2\npow b = a\nend\n";
        let err = parse_presentation(text, &cfg()).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("ill-ordered") || msg.contains("normal order"), "{msg}");
    }

    #[test]
    fn rejects_duplicate_generator() {
        let text = "pcgroup bad\ngen a a\nord a=2 a=2\nend\n";
        assert!(parse_presentation(text, &cfg()).is_err());
    }

    #[test]
    fn rejects_out_of_range_exponent() {
        let text = "pcgroup bad\ngen a b\nord a=2 b=3\nconj b^a = b^5\nend\n";
        assert!(parse_presentation(text, &cfg()).is_err());
    }

    #[test]
    fn enforces_order_bound() {
        let text = "pcgroup big\ngen a\nord a=2000000\nend\n";
        match parse_presentation(text, &cfg()) {
            Err(Error::OrderBound { .. }) | Err(Error::Parse { .. }) => {}
            other => panic!("expected order bound error, got {other:?}"),
        }
    }

    #[test]
    fn covering_requires_suffix_kernel() {
        let text = "pcgroup G\ngen x y z\nord x=3 y=3 z=3\ncomm [y,x] = z\nend\nkernel y\nquotient Q\n";
        assert!(parse_covering(text, &cfg()).is_err());
        let good = "pcgroup G\ngen x y z\nord x=3 y=3 z=3\ncomm [y,x] = z\nend\nkernel z\nquotient Q\n";
        let c = parse_covering(good, &cfg()).unwrap();
        assert_eq!(c.kernel_start, 2);
        assert_eq!(c.label, "Q");
    }

    #[test]
    fn kernel_of_all_generators_is_legal() {
        let text = "pcgroup G\ngen x\nord x=3\nend\nkernel x\nquotient T\n";
        let c = parse_covering(text, &cfg()).unwrap();
        assert_eq!(c.kernel_start, 0);
    }

    #[test]
    fn round_trip_pretty_print() {
        let text = "pcgroup Q8\ngen b a z\nord b=2 a=2 z=2\npow b = z\npow a = z\nconj a^b = a*z\nend\n";
        let p = parse_presentation(text, &cfg()).unwrap();
        let printed = p.pretty_print();
        let p2 = parse_presentation(&printed, &cfg()).unwrap();
        assert_eq!(p, p2);
    }

    #[test]
    fn inconsistent_toy_presentation_fails_a_named_overlap() {
        // deliberately broken conjugation word: b^a = c forces
        // b^{a^2} = c^a = c, but a^2 = 1 demands b^{a^2} = b.
        let text = "pcgroup broken\ngen a b c\nord a=2 b=2 c=2\nconj b^a = c\nend\n";
        let p = parse_presentation(text, &cfg()).unwrap();
        let rep = check_consistency(&p);
        assert!(!rep.passed());
        let f = rep.first_failure().unwrap();
        assert!(!f.description.is_empty());
        assert_ne!(f.lhs, f.rhs);
    }
}
