//! Text renderings of a zigzag diagram. The layout is a ladder: the base line
//! `A_-' O A_-` at the bottom, `V_j'` on odd rows on the left, `V_j` on even
//! rows on the right, `A_+` alone on the top row.

use std::fmt::Write as _;

use num_bigint::BigInt;

use super::ZigzagDiagram;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

pub fn render(d: &ZigzagDiagram, format: RenderFormat) -> String {
    let layout = Layout::new(d);
    match format {
        RenderFormat::Ascii => layout.ascii(),
        RenderFormat::Svg => layout.svg(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Col {
    Left,
    Center,
    Right,
}

struct Point {
    label: String,
    col: Col,
    row: usize,
}

struct Segment {
    from: usize,
    to: usize,
    /// Integral length, for edges of the two curves.
    length: Option<BigInt>,
}

struct Layout {
    title: String,
    points: Vec<Point>,
    left_curve: Vec<Segment>,
    right_curve: Vec<Segment>,
    zigzag: Vec<Segment>,
    top: usize,
}

impl Layout {
    fn new(d: &ZigzagDiagram) -> Self {
        let s = d.s();
        let top = 2 * s + 2;
        let mut points = vec![
            Point { label: "A-'".into(), col: Col::Left, row: 0 },
            Point { label: "O".into(), col: Col::Center, row: 0 },
            Point { label: "A-".into(), col: Col::Right, row: 0 },
        ];
        let left_ids: Vec<usize> = (1..=s + 1)
            .map(|j| {
                points.push(Point {
                    label: format!("V{j}' [{}]", d.left_weights[j - 1]),
                    col: Col::Left,
                    row: 2 * j - 1,
                });
                points.len() - 1
            })
            .collect();
        let right_ids: Vec<usize> = (1..=s)
            .map(|j| {
                points.push(Point {
                    label: format!("V{j} [{}]", d.right_weights[j - 1]),
                    col: Col::Right,
                    row: 2 * j,
                });
                points.len() - 1
            })
            .collect();
        points.push(Point { label: "A+".into(), col: Col::Center, row: top });
        let apex = points.len() - 1;

        let chain = |ids: Vec<usize>, lengths: &[BigInt]| -> Vec<Segment> {
            ids.windows(2)
                .zip(lengths)
                .map(|(w, l)| Segment { from: w[0], to: w[1], length: Some(l.clone()) })
                .collect()
        };
        let left_path: Vec<usize> = std::iter::once(0).chain(left_ids.iter().copied()).chain([apex]).collect();
        let right_path: Vec<usize> = std::iter::once(2).chain(right_ids.iter().copied()).chain([apex]).collect();
        let mut zig = vec![2];
        for j in 0..=s {
            zig.push(left_ids[j]);
            if j < s {
                zig.push(right_ids[j]);
            }
        }
        let zigzag = zig.windows(2).map(|w| Segment { from: w[0], to: w[1], length: None }).collect();

        Self {
            title: format!("ZZ({})", d.lambda()),
            left_curve: chain(left_path, &d.left_edges),
            right_curve: chain(right_path, &d.right_edges),
            points,
            zigzag,
            top,
        }
    }

    fn ascii(&self) -> String {
        const STEP: usize = 3;
        const GAP: usize = 10;
        let edge_label = |seg: &Segment| format!("({})", seg.length.as_ref().unwrap());
        let left_width = self
            .points
            .iter()
            .filter(|p| p.col == Col::Left)
            .map(|p| p.label.len())
            .chain(self.left_curve.iter().map(|s| edge_label(s).len()))
            .max()
            .unwrap_or(0);
        let x_left = left_width + 2;
        let xs = |c: Col| match c {
            Col::Left => x_left,
            Col::Center => x_left + GAP,
            Col::Right => x_left + 2 * GAP,
        };
        let height = self.top * STEP + 1;
        let width = x_left + 2 * GAP + 40;
        let mut grid = vec![vec![' '; width]; height];
        // Grid row 0 is the top line of the output.
        let line = |row: usize| (self.top - row) * STEP;
        let put = |grid: &mut Vec<Vec<char>>, y: usize, x: usize, text: &str| {
            for (i, ch) in text.chars().enumerate() {
                if let Some(cell) = grid[y].get_mut(x + i) {
                    *cell = ch;
                }
            }
        };

        // Base line.
        let base = line(0);
        for x in xs(Col::Left)..=xs(Col::Right) {
            grid[base][x] = '-';
        }

        let draw = |grid: &mut Vec<Vec<char>>, seg: &Segment, dotted: bool, label_left: bool| {
            let (a, b) = (&self.points[seg.from], &self.points[seg.to]);
            let (x1, y1) = (xs(a.col) as i64, line(a.row) as i64);
            let (x2, y2) = (xs(b.col) as i64, line(b.row) as i64);
            // y decreases going up the picture.
            let glyph = if dotted {
                '.'
            } else if x1 == x2 {
                '|'
            } else if x2 > x1 {
                '/'
            } else {
                '\\'
            };
            let span = y1 - y2;
            let x_at = |y: i64| (x1 + (2 * (x2 - x1) * (y1 - y) + span).div_euclid(2 * span)) as usize;
            for y in (y2 + 1)..y1 {
                grid[y as usize][x_at(y)] = glyph;
            }
            // Edge labels go on the line just above the lower endpoint.
            if let Some(len) = &seg.length {
                let (y, x) = ((y1 - 1) as usize, x_at(y1 - 1));
                let text = format!("({len})");
                if label_left {
                    put(grid, y, x - 1 - text.len(), &text);
                } else {
                    put(grid, y, x + 2, &text);
                }
            }
        };
        for seg in &self.zigzag {
            draw(&mut grid, seg, true, false);
        }
        for seg in &self.left_curve {
            draw(&mut grid, seg, false, true);
        }
        for seg in &self.right_curve {
            draw(&mut grid, seg, false, false);
        }

        for p in &self.points {
            let (x, y) = (xs(p.col), line(p.row));
            match (p.col, p.row) {
                (Col::Center, 0) => put(&mut grid, y, x, "O"),
                (Col::Left, _) => {
                    grid[y][x] = 'o';
                    put(&mut grid, y, x - 1 - p.label.len(), &p.label);
                }
                _ => {
                    grid[y][x] = 'o';
                    put(&mut grid, y, x + 2, &p.label);
                }
            }
        }

        let mut out = String::new();
        out.push_str(&self.title);
        out.push('\n');
        for row in grid {
            let text: String = row.into_iter().collect();
            out.push_str(text.trim_end());
            out.push('\n');
        }
        out
    }

    fn svg(&self) -> String {
        const DY: usize = 50;
        let xs = |c: Col| match c {
            Col::Left => 100,
            Col::Center => 200,
            Col::Right => 300,
        };
        let ys = |row: usize| 30 + (self.top - row) * DY;
        let width = 420;
        let height = 60 + self.top * DY;
        let pos = |i: usize| {
            let p = &self.points[i];
            (xs(p.col), ys(p.row))
        };
        let path = |ids: &[usize]| -> String {
            let mut d = String::new();
            for (k, i) in ids.iter().enumerate() {
                let (x, y) = pos(*i);
                let _ = write!(d, "{}{x} {y}", if k == 0 { "M" } else { " L" });
            }
            d
        };
        let curve_ids = |segs: &[Segment]| -> Vec<usize> {
            let mut ids = vec![segs[0].from];
            ids.extend(segs.iter().map(|s| s.to));
            ids
        };

        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
        );
        let _ = writeln!(
            out,
            "  <path d=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>",
            path(&[0, 2])
        );
        for segs in [&self.left_curve, &self.right_curve] {
            let _ = writeln!(
                out,
                "  <path d=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"3\"/>",
                path(&curve_ids(segs))
            );
        }
        let _ = writeln!(
            out,
            "  <path d=\"{}\" fill=\"none\" stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>",
            path(&curve_ids(&self.zigzag))
        );
        for (segs, dx) in [(&self.left_curve, -24i64), (&self.right_curve, 12)] {
            for seg in segs.iter() {
                let ((x1, y1), (x2, y2)) = (pos(seg.from), pos(seg.to));
                let mx = ((x1 + x2) / 2) as i64 + dx;
                let my = (y1 + y2) / 2;
                let _ = writeln!(
                    out,
                    "  <text x=\"{mx}\" y=\"{my}\" font-family=\"monospace\" font-size=\"11\">({})</text>",
                    seg.length.as_ref().unwrap()
                );
            }
        }
        for p in &self.points {
            let (x, y) = (xs(p.col), ys(p.row));
            let _ = writeln!(out, "  <circle cx=\"{x}\" cy=\"{y}\" r=\"3\" fill=\"black\"/>");
            let (tx, anchor) = match p.col {
                Col::Left => (x - 8, "end"),
                Col::Center => (x + 8, "start"),
                Col::Right => (x + 8, "start"),
            };
            let ty = if p.col == Col::Center && p.row == 0 { y + 16 } else { y + 4 };
            let _ = writeln!(
                out,
                "  <text x=\"{tx}\" y=\"{ty}\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"{anchor}\">{}</text>",
                p.label
            );
        }
        out.push_str("</svg>\n");
        out
    }
}
