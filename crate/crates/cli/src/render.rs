use cauchon::{CauchonDiagram, Square};

/// The colour grid with row and column numbers, border-box labels along
/// the bottom and down the right-hand side.
pub fn grid(d: &CauchonDiagram) -> String {
    let (m, n) = d.shape();
    let width = (m + n).to_string().len() + 3;
    let cell = |s: String| format!("{s:>width$}");
    let mut out = String::new();
    out.push_str(&cell(String::new()));
    for c in 1..=n {
        out.push_str(&cell(c.to_string()));
    }
    out.push('\n');
    for r in 1..=m {
        out.push_str(&cell(r.to_string()));
        for c in 1..=n {
            let ch = if d.is_white(Square::new(r, c)) { '+' } else { '0' };
            out.push_str(&cell(ch.to_string()));
        }
        let label = if r == m { n } else { m + n - r };
        out.push_str(&format!("  [{label}]"));
        out.push('\n');
    }
    out.push_str(&cell(String::new()));
    for k in 1..=n {
        out.push_str(&cell(format!("[{k}]")));
    }
    out.push('\n');
    out
}

const CROSSING: [&str; 3] = [" │ ", "─┼─", " │ "];
const ELBOWS: [&str; 3] = [" ╰╮", "╮ ╰", "╰╮ "];

/// Pipe-dream art: every black square is a crossing, every white square a
/// pair of elbows. Labels `1..=n` sit below the grid and `n+1..=n+m` to the
/// right; the exits are labelled along the top and the left.
pub fn pipe_dream(d: &CauchonDiagram) -> String {
    let (m, n) = d.shape();
    let w = (m + n).to_string().len();
    let pad = " ".repeat(w + 1);
    let mut out = String::new();
    out.push_str(&pad);
    for c in 1..=n {
        out.push_str(&format!(" {:<2}", m + c));
    }
    out.push('\n');
    for r in 1..=m {
        for line in 0..3 {
            if line == 1 {
                out.push_str(&format!("{:>w$} ", m - r + 1));
            } else {
                out.push_str(&pad);
            }
            for c in 1..=n {
                let art = if d.is_black(Square::new(r, c)) { CROSSING } else { ELBOWS };
                out.push_str(art[line]);
            }
            if line == 1 {
                out.push_str(&format!(" {}", n + m - r + 1));
            }
            out.push('\n');
        }
    }
    out.push_str(&pad);
    for c in 1..=n {
        out.push_str(&format!(" {c:<2}"));
    }
    out.push('\n');
    out
}
