//! SVG diagrams by recursive box layout.
//!
//! Every drawing fills an integer box with its four endpoints at the
//! corners. A sum places two boxes side by side and joins NE to NW and SE
//! to SW. A product transposes the left box through its NW-SE diagonal,
//! which maps the fraction `f` to `1/f`, and adds the right box.

use std::collections::HashMap;
use std::fmt::Write as _;

use tanglekit::fraction::rational_tree;
use tanglekit::Tangle;

type Point = (i64, i64);

/// A straight piece of strand.
#[derive(Clone, Copy, Debug)]
struct Segment {
    a: Point,
    b: Point,
}

/// Two diagonals of a unit box; `over` indexes the upper one.
#[derive(Clone, Copy, Debug)]
struct Crossing {
    segments: [usize; 2],
    over: usize,
}

#[derive(Clone, Debug, Default)]
pub struct Diagram {
    width: i64,
    height: i64,
    segments: Vec<Segment>,
    crossings: Vec<Crossing>,
}

impl Diagram {
    fn zero() -> Diagram {
        Diagram {
            width: 1,
            height: 1,
            segments: vec![
                Segment {
                    a: (0, 0),
                    b: (1, 0),
                },
                Segment {
                    a: (0, 1),
                    b: (1, 1),
                },
            ],
            crossings: Vec::new(),
        }
    }

    /// One crossing; for positive sign the NW-SE strand is on top.
    fn unit(positive: bool) -> Diagram {
        Diagram {
            width: 1,
            height: 1,
            segments: vec![
                Segment {
                    a: (0, 0),
                    b: (1, 1),
                },
                Segment {
                    a: (1, 0),
                    b: (0, 1),
                },
            ],
            crossings: vec![Crossing {
                segments: [0, 1],
                over: if positive { 0 } else { 1 },
            }],
        }
    }

    fn integer(n: i64) -> Diagram {
        if n == 0 {
            return Diagram::zero();
        }
        (1..n.abs()).fold(Diagram::unit(n > 0), |d, _| d.sum(Diagram::unit(n > 0)))
    }

    fn map(&mut self, f: impl Fn(Point) -> Point) {
        for s in &mut self.segments {
            s.a = f(s.a);
            s.b = f(s.b);
        }
    }

    /// Reflection through the NW-SE diagonal.
    fn transpose(mut self) -> Diagram {
        self.map(|(x, y)| (y, x));
        std::mem::swap(&mut self.width, &mut self.height);
        self
    }

    /// Extends the bottom endpoints straight down to `height`.
    fn pad(&mut self, height: i64) {
        if height > self.height {
            let (w, h) = (self.width, self.height);
            self.segments.push(Segment {
                a: (0, h),
                b: (0, height),
            });
            self.segments.push(Segment {
                a: (w, h),
                b: (w, height),
            });
            self.height = height;
        }
    }

    fn sum(mut self, mut other: Diagram) -> Diagram {
        let h = self.height.max(other.height);
        self.pad(h);
        other.pad(h);
        let dx = self.width + 1;
        other.map(|(x, y)| (x + dx, y));
        let base = self.segments.len();
        self.segments.push(Segment {
            a: (self.width, 0),
            b: (dx, 0),
        });
        self.segments.push(Segment {
            a: (self.width, h),
            b: (dx, h),
        });
        let shift = base + 2;
        self.segments.extend(other.segments);
        self.crossings
            .extend(other.crossings.into_iter().map(|c| Crossing {
                segments: [c.segments[0] + shift, c.segments[1] + shift],
                over: c.over,
            }));
        self.width = dx + other.width;
        self
    }

    pub fn of(t: &Tangle) -> Diagram {
        match t {
            Tangle::Int(n) => Diagram::integer(*n),
            Tangle::Rat(f) => Diagram::of(&rational_tree(f)),
            Tangle::Prod(l, r) => Diagram::of(l).transpose().sum(Diagram::of(r)),
        }
    }

    pub fn corners(&self) -> [(&'static str, Point); 4] {
        let (w, h) = (self.width, self.height);
        [
            ("NW", (0, 0)),
            ("NE", (w, 0)),
            ("SW", (0, h)),
            ("SE", (w, h)),
        ]
    }

    #[cfg(test)]
    fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Strand components as point sequences: the two arcs first, then the
    /// closed loops.
    pub fn components(&self) -> (Vec<Vec<Point>>, Vec<Vec<Point>>) {
        let mut at: HashMap<Point, Vec<usize>> = HashMap::new();
        for (i, s) in self.segments.iter().enumerate() {
            at.entry(s.a).or_default().push(i);
            at.entry(s.b).or_default().push(i);
        }
        let mut used = vec![false; self.segments.len()];
        let walk = |start: Point, first: usize, used: &mut Vec<bool>| {
            let mut pts = vec![start];
            let (mut p, mut seg) = (start, first);
            loop {
                used[seg] = true;
                let s = self.segments[seg];
                p = if s.a == p { s.b } else { s.a };
                pts.push(p);
                match at[&p].iter().find(|&&j| !used[j]) {
                    Some(&j) => seg = j,
                    None => return pts,
                }
            }
        };
        let mut arcs = Vec::new();
        for (_, c) in self.corners() {
            if let Some(&seg) = at.get(&c).and_then(|v| v.iter().find(|&&j| !used[j])) {
                arcs.push(walk(c, seg, &mut used));
            }
        }
        let mut loops = Vec::new();
        for i in 0..self.segments.len() {
            if !used[i] {
                loops.push(walk(self.segments[i].a, i, &mut used));
            }
        }
        (arcs, loops)
    }

    pub fn to_svg(&self) -> String {
        const UNIT: f64 = 40.0;
        const MARGIN: f64 = 30.0;
        let px = |(x, y): Point| (MARGIN + x as f64 * UNIT, MARGIN + y as f64 * UNIT);
        let (w, h) = px((self.width, self.height));
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}">"#,
            w + MARGIN,
            h + MARGIN
        );
        let _ = writeln!(out, r#"<g fill="none" stroke="black" stroke-width="2">"#);
        let (arcs, loops) = self.components();
        for (class, paths) in [("arc", &arcs), ("loop", &loops)] {
            for pts in paths {
                let mut d = String::new();
                for (i, p) in pts.iter().enumerate() {
                    let (x, y) = px(*p);
                    let _ = write!(d, "{}{x} {y} ", if i == 0 { "M" } else { "L" });
                }
                let _ = writeln!(out, r#"<path class="{class}" d="{}"/>"#, d.trim_end());
            }
        }
        for c in &self.crossings {
            let s = self.segments[c.segments[c.over]];
            let (ax, ay) = px(s.a);
            let (bx, by) = px(s.b);
            let (mx, my) = ((ax + bx) / 2.0, (ay + by) / 2.0);
            let (dx, dy) = ((bx - ax) * 0.3, (by - ay) * 0.3);
            let (x1, y1, x2, y2) = (mx - dx, my - dy, mx + dx, my + dy);
            let _ = writeln!(
                out,
                r#"<g class="crossing"><line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="white" stroke-width="8"/><line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/></g>"#
            );
        }
        let _ = writeln!(out, "</g>");
        for (name, c) in self.corners() {
            let (x, y) = px(c);
            let ty = if c.1 == 0 { y - 10.0 } else { y + 20.0 };
            let _ = writeln!(
                out,
                r#"<g class="endpoint"><circle cx="{x}" cy="{y}" r="3"/><text x="{x}" y="{ty}" text-anchor="middle" font-size="12">{name}</text></g>"#
            );
        }
        out.push_str("</svg>\n");
        out
    }
}
