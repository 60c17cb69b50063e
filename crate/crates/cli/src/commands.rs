use gpf_core::classical::{parking_to_dyck, tree_from_dyck, LabeledDyckPath};
use gpf_core::sandpile::{
    compare_waves_and_heights, external_activity, greedy_min_path, is_allowed, separation_experiment,
    to_allowed_config, UndirectedEdgeOrder,
};
use gpf_core::{
    count_spanning_trees, enumerate_parking_functions, enumerate_spanning_trees, is_parking_burning,
    is_parking_definitional, phi, theta, verify_bijection, Error, Multigraph, ParkingCandidate, RootedTree, Vertex,
};
use serde_json::{json, Value};

use crate::input::{
    check_cap, inline_or_file, load_candidate, load_graph, load_policy, load_tree, CliError, CliResult,
};
use crate::{CheckMethod, CountMethod, DyckCommand, Format, SandpileCommand, What};

/// What one command prints, in both formats, and its verdict.
pub struct Report {
    text: String,
    json: Value,
    pub ok: bool,
}

impl Report {
    fn new(command: &str, text: String, mut json: Value, ok: bool) -> Self {
        let obj = json.as_object_mut().expect("reports are objects");
        obj.insert("v".into(), json!(1));
        obj.insert("command".into(), json!(command));
        obj.insert("ok".into(), json!(ok));
        Report { text, json, ok }
    }

    pub fn negative(msg: &str) -> Self {
        Report::new("error", msg.to_string(), json!({ "error": msg }), false)
    }

    pub fn print(&self, format: Format) {
        match format {
            Format::Text => {
                print!("{}", self.text);
                if !self.text.is_empty() && !self.text.ends_with('\n') {
                    println!();
                }
            }
            Format::Json => println!("{}", self.json),
        }
    }
}

fn tree_json(t: &RootedTree) -> Value {
    Value::Array(t.edges().map(|e| json!({ "vertex": e.tail, "head": e.head, "copy": e.copy })).collect())
}

fn set_text(vs: &[Vertex]) -> String {
    let words: Vec<String> = vs.iter().map(ToString::to_string).collect();
    format!("{{{}}}", words.join(", "))
}

fn partition_text(label: &str, parts: &[Vec<Vertex>]) -> String {
    parts
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let words: Vec<String> = p.iter().map(ToString::to_string).collect();
            format!("{label} {i}: {}\n", words.join(" "))
        })
        .collect()
}

pub fn check(graph: &str, pf: &str, method: CheckMethod, policy: &str) -> CliResult<Report> {
    let g = load_graph(graph)?;
    let b = load_candidate(&g, pf)?;
    let verdict = |ok: bool| if ok { "parking function\n" } else { "not a parking function\n" };
    match method {
        CheckMethod::Burning => {
            let r = is_parking_burning(&g, &b)?;
            let mut text = verdict(r.accepted).to_string();
            text += &partition_text("wave", &r.waves);
            if !r.accepted {
                text += &format!("witness U = {}\n", set_text(&r.stuck));
            }
            let witness = (!r.accepted).then_some(&r.stuck);
            let json = json!({ "method": "burning", "parking": r.accepted, "waves": r.waves, "witness": witness });
            Ok(Report::new("check", text, json, r.accepted))
        }
        CheckMethod::Definitional => {
            check_cap(g.n(), "definitional check")?;
            let witness = is_parking_definitional(&g, &b)?;
            let mut text = verdict(witness.is_none()).to_string();
            if let Some(w) = &witness {
                text += &format!("witness U = {}\n", set_text(w));
            }
            let json = json!({ "method": "definitional", "parking": witness.is_none(), "witness": witness });
            Ok(Report::new("check", text, json, witness.is_none()))
        }
        CheckMethod::Phi => {
            let p = load_policy(&g, policy)?;
            match phi(&g, &b, &p) {
                Ok((t, trace)) => {
                    let mut text = verdict(true).to_string();
                    for step in &trace.steps {
                        text += &format!("{step}\n");
                    }
                    let steps: Vec<String> = trace.steps.iter().map(ToString::to_string).collect();
                    let json = json!({ "method": "phi", "policy": p.name(), "parking": true, "trace": steps, "tree": tree_json(&t) });
                    Ok(Report::new("check", text, json, true))
                }
                Err(Error::NotParkingFunction { step, stuck }) => {
                    let text = format!("{}stuck at step {step}\nwitness U = {}\n", verdict(false), set_text(&stuck));
                    let json = json!({ "method": "phi", "policy": p.name(), "parking": false, "step": step, "witness": stuck });
                    Ok(Report::new("check", text, json, false))
                }
                Err(e) => Err(e.into()),
            }
        }
    }
}

pub fn to_tree(graph: &str, pf: &str, policy: &str, show_trace: bool) -> CliResult<Report> {
    let g = load_graph(graph)?;
    let b = load_candidate(&g, pf)?;
    let p = load_policy(&g, policy)?;
    let (t, trace) = phi(&g, &b, &p)?;
    let mut text = String::new();
    if show_trace {
        for step in &trace.steps {
            text += &format!("# {step}\n");
        }
    }
    text += &t.to_string();
    let json = json!({ "policy": p.name(), "pf": b.values(), "tree": tree_json(&t) });
    Ok(Report::new("to-tree", text, json, true))
}

pub fn to_pf(graph: &str, tree: &str, policy: &str) -> CliResult<Report> {
    let g = load_graph(graph)?;
    let t = load_tree(&g, tree)?;
    let p = load_policy(&g, policy)?;
    let b = theta(&g, &t, &p)?;
    let json = json!({ "policy": p.name(), "pf": b.values() });
    Ok(Report::new("to-pf", b.to_string(), json, true))
}

pub fn enumerate(graph: &str, what: What, policy: &str) -> CliResult<Report> {
    let g = load_graph(graph)?;
    check_cap(g.n(), "enumeration")?;
    let (text, json) = match what {
        What::Pfs => {
            let pfs = enumerate_parking_functions(&g);
            let text: String = pfs.iter().map(|b| format!("{b}\n")).collect();
            let list: Vec<&[usize]> = pfs.iter().map(ParkingCandidate::values).collect();
            (text, json!({ "what": "pfs", "count": pfs.len(), "pfs": list }))
        }
        What::Trees => {
            let mut trees = enumerate_spanning_trees(&g);
            trees.sort();
            let text: String = trees.iter().map(|t| format!("{}\n", t.compact())).collect();
            let list: Vec<Value> = trees.iter().map(tree_json).collect();
            (text, json!({ "what": "trees", "count": trees.len(), "trees": list }))
        }
        What::Pairs => {
            let p = load_policy(&g, policy)?;
            let mut pairs = enumerate_spanning_trees(&g)
                .into_iter()
                .map(|t| Ok((theta(&g, &t, &p)?, t)))
                .collect::<Result<Vec<_>, Error>>()?;
            pairs.sort();
            let text: String = pairs.iter().map(|(b, t)| format!("{b} | {}\n", t.compact())).collect();
            let list: Vec<Value> =
                pairs.iter().map(|(b, t)| json!({ "pf": b.values(), "tree": tree_json(t) })).collect();
            (text, json!({ "what": "pairs", "policy": p.name(), "count": pairs.len(), "pairs": list }))
        }
    };
    Ok(Report::new("enumerate", text, json, true))
}

pub fn count(graph: &str, method: CountMethod) -> CliResult<Report> {
    let g = load_graph(graph)?;
    let (n, name) = match method {
        CountMethod::MatrixTree => (count_spanning_trees(&g), "matrix-tree"),
        CountMethod::Exhaustive => {
            check_cap(g.n(), "exhaustive count")?;
            (enumerate_spanning_trees(&g).len().into(), "exhaustive")
        }
    };
    let value = match u64::try_from(&n) {
        Ok(small) => json!(small),
        Err(_) => json!(n.to_string()),
    };
    Ok(Report::new("count", n.to_string(), json!({ "method": name, "count": value }), true))
}

pub fn verify(graph: &str, policy: &str) -> CliResult<Report> {
    let g = load_graph(graph)?;
    check_cap(g.n(), "verification")?;
    let p = load_policy(&g, policy)?;
    let r = verify_bijection(&g, &p);
    let pfs = |v: &[ParkingCandidate]| v.iter().map(|b| b.values().to_vec()).collect::<Vec<_>>();
    let trees = |v: &[RootedTree]| v.iter().map(tree_json).collect::<Vec<_>>();
    let json = json!({
        "policy": r.policy,
        "trees": r.trees,
        "parking_functions": r.parking_functions,
        "theta_phi_failures": pfs(&r.theta_phi_failures),
        "phi_theta_failures": trees(&r.phi_theta_failures),
        "theta_not_parking": trees(&r.theta_not_parking),
        "order_failures": pfs(&r.order_failures),
        "policy_defect": r.policy_defect.as_ref().map(ToString::to_string),
        "bijection": r.is_bijection(),
    });
    Ok(Report::new("verify", r.to_string(), json, r.is_bijection()))
}

pub fn order(tree: &str, graph: &str, policy: &str) -> CliResult<Report> {
    let g = load_graph(graph)?;
    let t = load_tree(&g, tree)?;
    let p = load_policy(&g, policy)?;
    let order = p.compute_order(&g, &t)?;
    let words: Vec<String> = order.iter().map(ToString::to_string).collect();
    Ok(Report::new("order", words.join(" "), json!({ "policy": p.name(), "order": order }), true))
}

fn edge_order(g: &Multigraph, file: Option<&str>) -> CliResult<UndirectedEdgeOrder> {
    match file {
        None => Ok(UndirectedEdgeOrder::lex(g)),
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
            UndirectedEdgeOrder::parse(g, &text).map_err(|e| CliError::Usage(format!("{path}: {e}")))
        }
    }
}

pub fn sandpile(command: SandpileCommand) -> CliResult<Report> {
    match command {
        SandpileCommand::Waves { graph, pf } => {
            let g = load_graph(&graph)?;
            let b = load_candidate(&g, &pf)?;
            let c = compare_waves_and_heights(&g, &b)?;
            let mut text = partition_text("wave", &c.waves);
            text += &partition_text("height", &c.heights);
            text += if c.matches() { "match\n" } else { "mismatch\n" };
            let json = json!({ "waves": c.waves, "heights": c.heights, "match": c.matches() });
            Ok(Report::new("sandpile waves", text, json, c.matches()))
        }
        SandpileCommand::Activity { graph, tree, edge_order: file } => {
            let g = load_graph(&graph)?;
            let t = load_tree(&g, &tree)?;
            let ord = edge_order(&g, file.as_deref())?;
            let a = external_activity(&g, &t, &ord)?;
            Ok(Report::new("sandpile activity", a.to_string(), json!({ "activity": a }), true))
        }
        SandpileCommand::Greedy { graph, edge_order: file } => {
            let g = load_graph(&graph)?;
            let ord = edge_order(&g, file.as_deref())?;
            let t = greedy_min_path(&g, &ord)?;
            let a = external_activity(&g, &t, &ord)?;
            let text = format!("# activity {a}\n{t}");
            Ok(Report::new("sandpile greedy", text, json!({ "tree": tree_json(&t), "activity": a }), true))
        }
        SandpileCommand::Config { graph, pf } => {
            let g = load_graph(&graph)?;
            let b = load_candidate(&g, &pf)?;
            let u = to_allowed_config(&g, &b)?;
            let allowed = is_allowed(&g, &u)?;
            let text = format!("{u}\n{}\n", if allowed { "allowed" } else { "not allowed" });
            Ok(Report::new("sandpile config", text, json!({ "config": u.0, "allowed": allowed }), allowed))
        }
        SandpileCommand::Separate { n } => {
            if n < 2 {
                return Err(CliError::Usage(format!("separate needs n >= 2, got {n}")));
            }
            check_cap(n, "separation experiment")?;
            let r = separation_experiment(n)?;
            let failures: Vec<Value> =
                r.permutation_failures.iter().map(|(p, t)| json!({ "policy": p, "tree": tree_json(t) })).collect();
            let json = json!({
                "n": r.n,
                "hamiltonian_paths": r.hamiltonian_paths,
                "policies": r.policies,
                "permutation_failures": failures,
                "greedy_path": tree_json(&r.greedy_path),
                "greedy_activity": r.greedy_activity,
                "active_witness": r.active_witness.as_ref().map(|(t, a)| json!({ "tree": tree_json(t), "activity": a })),
                "holds": r.holds(),
            });
            Ok(Report::new("sandpile separate", r.to_string(), json, r.holds()))
        }
    }
}

pub fn dyck(command: DyckCommand) -> CliResult<Report> {
    match command {
        DyckCommand::Encode { pf } => {
            let text = inline_or_file(&pf)?;
            let b: ParkingCandidate = text.parse()?;
            let d = parking_to_dyck(&b)?;
            Ok(Report::new("dyck encode", d.to_string(), json!({ "pf": b.values(), "path": d.to_string() }), true))
        }
        DyckCommand::Decode { path } => {
            let d: LabeledDyckPath = path.parse()?;
            let t = tree_from_dyck(&d)?;
            let b = d.to_parking();
            let text = format!("# parking function {b}\n{t}");
            Ok(Report::new("dyck decode", text, json!({ "pf": b.values(), "tree": tree_json(&t) }), true))
        }
    }
}
