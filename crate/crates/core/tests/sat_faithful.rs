//! The CNF encoding against the search engine.

use egr_core::sat::{
    assignment_for_coloring, check_model_against_cnf, decode_model, encode_grid_cnf, parse_dimacs, parse_model,
    write_dimacs,
};
use egr_core::search::search_good_coloring;
use egr_core::{CnfDocument, GridColoring, SearchOptions};

/// Minimal DPLL with unit propagation, independent of the encoder.
fn dpll(cnf: &CnfDocument) -> Option<Vec<bool>> {
    fn solve(clauses: &[Vec<i32>], assign: &mut Vec<i8>) -> bool {
        // unit propagation to a fixed point
        let mut trail = Vec::new();
        loop {
            let mut changed = false;
            for cl in clauses {
                let mut unassigned = None;
                let mut free = 0;
                let mut sat = false;
                for &l in cl {
                    let v = assign[l.unsigned_abs() as usize];
                    if v == 0 {
                        free += 1;
                        unassigned = Some(l);
                    } else if (v > 0) == (l > 0) {
                        sat = true;
                        break;
                    }
                }
                if sat {
                    continue;
                }
                match free {
                    0 => {
                        for v in trail {
                            assign[v] = 0;
                        }
                        return false;
                    }
                    1 => {
                        let l = unassigned.unwrap();
                        assign[l.unsigned_abs() as usize] = if l > 0 { 1 } else { -1 };
                        trail.push(l.unsigned_abs() as usize);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }
        let Some(var) = (1..assign.len()).find(|&v| assign[v] == 0) else {
            return true;
        };
        for val in [1, -1] {
            assign[var] = val;
            if solve(clauses, assign) {
                return true;
            }
        }
        assign[var] = 0;
        for v in trail {
            assign[v] = 0;
        }
        false
    }
    let mut assign = vec![0i8; cnf.num_vars() as usize + 1];
    solve(cnf.clauses(), &mut assign).then(|| assign[1..].iter().map(|&v| v > 0).collect())
}

/// Satisfiable iff some coloring with canonical selectors satisfies it:
/// selectors only appear positively in the rainbow clauses and may be true
/// only between equal colors, so setting each one exactly when its cells
/// agree is the best choice for every coloring.
fn sat_by_enumeration(n: usize, m: usize, r: u32, cnf: &CnfDocument) -> bool {
    let mut cells = vec![1u32; n * m];
    loop {
        let g = GridColoring::from_flat(n, m, r, cells.clone()).unwrap();
        if check_model_against_cnf(cnf, &assignment_for_coloring(&g)).unwrap() {
            return true;
        }
        let mut k = cells.len();
        loop {
            if k == 0 {
                return false;
            }
            k -= 1;
            if cells[k] < r {
                cells[k] += 1;
                break;
            }
            cells[k] = 1;
        }
    }
}

fn instances() -> Vec<(usize, usize, u32)> {
    let mut v = Vec::new();
    for n in 2..=4 {
        for m in 2..=9 / n {
            for r in 1..=4 {
                v.push((n, m, r));
            }
        }
    }
    v
}

#[test]
fn satisfiability_matches_the_engine() {
    for (n, m, r) in instances() {
        let cnf = encode_grid_cnf(n, m, r).unwrap();
        let engine = search_good_coloring(n, m, r, &SearchOptions::default());
        assert!(engine.is_found() || engine.is_exhausted());
        let model = dpll(&cnf);
        assert_eq!(model.is_some(), engine.is_found(), "dpll ({n},{m},{r})");
        assert_eq!(sat_by_enumeration(n, m, r, &cnf), engine.is_found(), "enumeration ({n},{m},{r})");
        if let Some(model) = model {
            assert!(check_model_against_cnf(&cnf, &model).unwrap());
            let g = decode_model(n, m, r, &model).unwrap();
            assert!(g.verify_good().is_good);
        }
        if let Some(w) = engine.witness {
            assert!(check_model_against_cnf(&cnf, &assignment_for_coloring(&w)).unwrap());
        }
    }
}

#[test]
fn every_coloring_satisfies_iff_good() {
    // (2,3,4): 4^6 colorings, each checked against the formula
    let (n, m, r) = (2, 3, 4);
    let cnf = encode_grid_cnf(n, m, r).unwrap();
    for code in 0..4u32.pow(6) {
        let cells: Vec<u32> = (0..6).map(|k| (code / 4u32.pow(k)) % 4 + 1).collect();
        let g = GridColoring::from_flat(n, m, r, cells).unwrap();
        let sat = check_model_against_cnf(&cnf, &assignment_for_coloring(&g)).unwrap();
        assert_eq!(sat, g.verify_good().is_good, "{g:?}");
    }
}

#[test]
fn dimacs_round_trip_and_external_model() {
    let cnf = encode_grid_cnf(3, 3, 3).unwrap();
    let text = write_dimacs(&cnf);
    let back = parse_dimacs(&text).unwrap();
    assert_eq!(back, cnf);
    assert_eq!(back.grid_instance(), Some((3, 3, 3)));

    let model = dpll(&cnf).unwrap();
    let mut out = String::from("s SATISFIABLE\nv");
    for (k, &b) in model.iter().enumerate() {
        let lit = k as i64 + 1;
        out += &format!(" {}", if b { lit } else { -lit });
    }
    out += " 0\n";
    let parsed = parse_model(&out, cnf.num_vars()).unwrap();
    assert_eq!(parsed, model);
    assert!(decode_model(3, 3, 3, &parsed).unwrap().verify_good().is_good);
}
