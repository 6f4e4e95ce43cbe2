//! Minimal SVG writer shared by the plotting emitters.

use std::fmt::Write;

pub(crate) struct SvgDoc {
    body: String,
    width: f64,
    height: f64,
}

impl SvgDoc {
    pub fn new(width: f64, height: f64) -> Self {
        SvgDoc {
            body: String::new(),
            width,
            height,
        }
    }

    pub fn polyline(&mut self, id: &str, points: &[(f64, f64)], stroke: &str) {
        let coords: Vec<String> = points.iter().map(|(x, y)| format!("{x:.3},{y:.3}")).collect();
        let _ = writeln!(
            self.body,
            r#"<polyline id="{id}" fill="none" stroke="{stroke}" stroke-width="1.5" points="{}"/>"#,
            coords.join(" ")
        );
    }

    pub fn line(&mut self, from: (f64, f64), to: (f64, f64), stroke: &str) {
        let _ = writeln!(
            self.body,
            r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="{stroke}" stroke-width="1"/>"#,
            from.0, from.1, to.0, to.1
        );
    }

    pub fn circle(&mut self, center: (f64, f64), radius: f64, fill: &str) {
        let _ = writeln!(
            self.body,
            r#"<circle cx="{:.3}" cy="{:.3}" r="{radius:.3}" fill="{fill}"/>"#,
            center.0, center.1
        );
    }

    pub fn rect(&mut self, origin: (f64, f64), size: (f64, f64), fill: &str, stroke: &str) {
        let _ = writeln!(
            self.body,
            r#"<rect x="{:.3}" y="{:.3}" width="{:.3}" height="{:.3}" fill="{fill}" stroke="{stroke}"/>"#,
            origin.0, origin.1, size.0, size.1
        );
    }

    pub fn text(&mut self, at: (f64, f64), anchor: &str, content: &str) {
        let _ = writeln!(
            self.body,
            r#"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="11" text-anchor="{anchor}">{}</text>"#,
            at.0,
            at.1,
            escape(content)
        );
    }

    pub fn finish(self) -> String {
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
             <svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n\
             <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{body}</svg>\n",
            w = self.width,
            h = self.height,
            body = self.body
        )
    }
}

pub(crate) fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

/// Maps a data rectangle onto a pixel rectangle (y axis flipped).
#[derive(Debug, Clone, Copy)]
pub(crate) struct PlotArea {
    x_range: (f64, f64),
    y_range: (f64, f64),
    origin: (f64, f64),
    size: (f64, f64),
}

impl PlotArea {
    pub fn new(x_range: (f64, f64), y_range: (f64, f64), origin: (f64, f64), size: (f64, f64)) -> Self {
        let widen = |(lo, hi): (f64, f64)| if hi > lo { (lo, hi) } else { (lo - 1.0, hi + 1.0) };
        PlotArea {
            x_range: widen(x_range),
            y_range: widen(y_range),
            origin,
            size,
        }
    }

    /// Bounds covering `points` and the origin.
    pub fn fit(points: impl IntoIterator<Item = (f64, f64)>, origin: (f64, f64), size: (f64, f64)) -> Self {
        let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
        for (x, y) in points {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        PlotArea::new((x0, x1), (y0, y1), origin, size)
    }

    pub fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        let fx = (x - self.x_range.0) / (self.x_range.1 - self.x_range.0);
        let fy = (y - self.y_range.0) / (self.y_range.1 - self.y_range.0);
        (
            self.origin.0 + fx * self.size.0,
            self.origin.1 + (1.0 - fy) * self.size.1,
        )
    }

    /// Draws the x = 0 / y = 0 axes (clamped to the area) with range labels.
    pub fn draw_axes(&self, doc: &mut SvgDoc, x_label: &str, y_label: &str) {
        let x_axis_y = 0.0f64.clamp(self.y_range.0, self.y_range.1);
        let y_axis_x = 0.0f64.clamp(self.x_range.0, self.x_range.1);
        let left = self.map((self.x_range.0, x_axis_y));
        let right = self.map((self.x_range.1, x_axis_y));
        let bottom = self.map((y_axis_x, self.y_range.0));
        let top = self.map((y_axis_x, self.y_range.1));
        doc.line(left, right, "#888888");
        doc.line(bottom, top, "#888888");
        doc.text((right.0, right.1 + 14.0), "end", x_label);
        doc.text((top.0 + 4.0, top.1 - 4.0), "start", y_label);
        doc.text((left.0, left.1 + 14.0), "start", &format!("{}", self.x_range.0));
        doc.text((right.0, right.1 + 26.0), "end", &format!("{}", self.x_range.1));
        doc.text((bottom.0 - 4.0, bottom.1), "end", &format!("{}", self.y_range.0));
        doc.text((top.0 - 4.0, top.1 + 10.0), "end", &format!("{}", self.y_range.1));
    }
}
