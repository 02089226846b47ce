//! Objective and gradient kernels for the cataloged problems.
//!
//! Indices are zero-based here; the usual statements are one-based.

pub(super) fn srosenbr(x: &[f64]) -> f64 {
    x.chunks_exact(2)
        .map(|p| {
            let (a, b) = (p[0], p[1]);
            100.0 * (b - a * a).powi(2) + (1.0 - a).powi(2)
        })
        .sum()
}

pub(super) fn srosenbr_grad(x: &[f64], g: &mut [f64]) {
    for (p, gp) in x.chunks_exact(2).zip(g.chunks_exact_mut(2)) {
        let (a, b) = (p[0], p[1]);
        let u = b - a * a;
        gp[0] = -400.0 * a * u - 2.0 * (1.0 - a);
        gp[1] = 200.0 * u;
    }
}

pub(super) fn arwhead(x: &[f64]) -> f64 {
    let (head, last) = x.split_at(x.len() - 1);
    let xn2 = last[0] * last[0];
    head.iter()
        .map(|&xi| (-4.0 * xi + 3.0) + (xi * xi + xn2).powi(2))
        .sum()
}

pub(super) fn arwhead_grad(x: &[f64], g: &mut [f64]) {
    let n = x.len();
    let xn = x[n - 1];
    let mut acc = 0.0;
    for i in 0..n - 1 {
        let t = x[i] * x[i] + xn * xn;
        g[i] = -4.0 + 4.0 * t * x[i];
        acc += 4.0 * t * xn;
    }
    g[n - 1] = acc;
}

pub(super) fn nondia(x: &[f64]) -> f64 {
    let x0 = x[0];
    (x0 - 1.0).powi(2)
        + x[..x.len() - 1]
            .iter()
            .map(|&xp| 100.0 * (x0 - xp * xp).powi(2))
            .sum::<f64>()
}

pub(super) fn nondia_grad(x: &[f64], g: &mut [f64]) {
    let n = x.len();
    let x0 = x[0];
    g.fill(0.0);
    let mut g0 = 2.0 * (x0 - 1.0);
    for i in 1..n {
        let xp = x[i - 1];
        let u = x0 - xp * xp;
        g0 += 200.0 * u;
        g[i - 1] -= 400.0 * u * xp;
    }
    g[0] += g0;
}

pub(super) fn dqdrtic(x: &[f64]) -> f64 {
    x.windows(3)
        .map(|w| w[0] * w[0] + 100.0 * w[1] * w[1] + 100.0 * w[2] * w[2])
        .sum()
}

pub(super) fn dqdrtic_grad(x: &[f64], g: &mut [f64]) {
    g.fill(0.0);
    for i in 0..x.len() - 2 {
        g[i] += 2.0 * x[i];
        g[i + 1] += 200.0 * x[i + 1];
        g[i + 2] += 200.0 * x[i + 2];
    }
}

pub(super) fn dqrtic(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(i, &xi)| (xi - (i + 1) as f64).powi(4))
        .sum()
}

pub(super) fn dqrtic_grad(x: &[f64], g: &mut [f64]) {
    for (i, (gi, &xi)) in g.iter_mut().zip(x).enumerate() {
        *gi = 4.0 * (xi - (i + 1) as f64).powi(3);
    }
}

pub(super) fn engval1(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| (w[0] * w[0] + w[1] * w[1]).powi(2) - 4.0 * w[0] + 3.0)
        .sum()
}

pub(super) fn engval1_grad(x: &[f64], g: &mut [f64]) {
    g.fill(0.0);
    for i in 0..x.len() - 1 {
        let t = x[i] * x[i] + x[i + 1] * x[i + 1];
        g[i] += 4.0 * t * x[i] - 4.0;
        g[i + 1] += 4.0 * t * x[i + 1];
    }
}

pub(super) fn woods(x: &[f64]) -> f64 {
    x.chunks_exact(4)
        .map(|b| {
            let (w, x, y, z) = (b[0], b[1], b[2], b[3]);
            100.0 * (x - w * w).powi(2)
                + (1.0 - w).powi(2)
                + 90.0 * (z - y * y).powi(2)
                + (1.0 - y).powi(2)
                + 10.1 * ((x - 1.0).powi(2) + (z - 1.0).powi(2))
                + 19.8 * (x - 1.0) * (z - 1.0)
        })
        .sum()
}

pub(super) fn woods_grad(x: &[f64], g: &mut [f64]) {
    for (b, gb) in x.chunks_exact(4).zip(g.chunks_exact_mut(4)) {
        let (w, x, y, z) = (b[0], b[1], b[2], b[3]);
        gb[0] = -400.0 * w * (x - w * w) - 2.0 * (1.0 - w);
        gb[1] = 200.0 * (x - w * w) + 20.2 * (x - 1.0) + 19.8 * (z - 1.0);
        gb[2] = -360.0 * y * (z - y * y) - 2.0 * (1.0 - y);
        gb[3] = 180.0 * (z - y * y) + 20.2 * (z - 1.0) + 19.8 * (x - 1.0);
    }
}

const PENALTY1_A: f64 = 1e-5;

pub(super) fn penalty1(x: &[f64]) -> f64 {
    let s: f64 = x.iter().map(|v| v * v).sum();
    let lin: f64 = x.iter().map(|v| PENALTY1_A * (v - 1.0).powi(2)).sum();
    lin + (s - 0.25).powi(2)
}

pub(super) fn penalty1_grad(x: &[f64], g: &mut [f64]) {
    let s: f64 = x.iter().map(|v| v * v).sum();
    let t = 4.0 * (s - 0.25);
    for (gi, &xi) in g.iter_mut().zip(x) {
        *gi = 2.0 * PENALTY1_A * (xi - 1.0) + t * xi;
    }
}

pub(super) fn extrosnb(x: &[f64]) -> f64 {
    (x[0] - 1.0).powi(2)
        + x.windows(2)
            .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2))
            .sum::<f64>()
}

pub(super) fn extrosnb_grad(x: &[f64], g: &mut [f64]) {
    g.fill(0.0);
    g[0] = 2.0 * (x[0] - 1.0);
    for i in 1..x.len() {
        let u = x[i] - x[i - 1] * x[i - 1];
        g[i] += 200.0 * u;
        g[i - 1] -= 400.0 * u * x[i - 1];
    }
}

pub(super) fn cosine(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| (-0.5 * w[1] + w[0] * w[0]).cos())
        .sum()
}

pub(super) fn cosine_grad(x: &[f64], g: &mut [f64]) {
    g.fill(0.0);
    for i in 0..x.len() - 1 {
        let sn = (-0.5 * x[i + 1] + x[i] * x[i]).sin();
        g[i] -= 2.0 * x[i] * sn;
        g[i + 1] += 0.5 * sn;
    }
}

pub(super) fn edensch(x: &[f64]) -> f64 {
    16.0 + x
        .windows(2)
        .map(|w| {
            let (a, b) = (w[0], w[1]);
            (a - 2.0).powi(4) + (a * b - 2.0 * b).powi(2) + (b + 1.0).powi(2)
        })
        .sum::<f64>()
}

pub(super) fn edensch_grad(x: &[f64], g: &mut [f64]) {
    g.fill(0.0);
    for i in 0..x.len() - 1 {
        let (a, b) = (x[i], x[i + 1]);
        let v = a * b - 2.0 * b;
        g[i] += 4.0 * (a - 2.0).powi(3) + 2.0 * v * b;
        g[i + 1] += 2.0 * v * (a - 2.0) + 2.0 * (b + 1.0);
    }
}

pub(super) fn liarwhd(x: &[f64]) -> f64 {
    let x0 = x[0];
    x.iter()
        .map(|&xi| 4.0 * (xi * xi - x0).powi(2) + (xi - 1.0).powi(2))
        .sum()
}

pub(super) fn liarwhd_grad(x: &[f64], g: &mut [f64]) {
    let x0 = x[0];
    let mut g0 = 0.0;
    for (gi, &xi) in g.iter_mut().zip(x) {
        let u = xi * xi - x0;
        *gi = 16.0 * u * xi + 2.0 * (xi - 1.0);
        g0 -= 8.0 * u;
    }
    g[0] += g0;
}

fn vardim_weighted(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(i, &xi)| (i + 1) as f64 * (xi - 1.0))
        .sum()
}

pub(super) fn vardim(x: &[f64]) -> f64 {
    let s = vardim_weighted(x);
    x.iter().map(|v| (v - 1.0).powi(2)).sum::<f64>() + s * s + s.powi(4)
}

pub(super) fn vardim_grad(x: &[f64], g: &mut [f64]) {
    let s = vardim_weighted(x);
    let t = 2.0 * s + 4.0 * s.powi(3);
    for (i, (gi, &xi)) in g.iter_mut().zip(x).enumerate() {
        *gi = 2.0 * (xi - 1.0) + (i + 1) as f64 * t;
    }
}

fn power_weighted(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(i, &xi)| (i + 1) as f64 * xi * xi)
        .sum()
}

pub(super) fn power(x: &[f64]) -> f64 {
    power_weighted(x).powi(2)
}

pub(super) fn power_grad(x: &[f64], g: &mut [f64]) {
    let s = power_weighted(x);
    for (i, (gi, &xi)) in g.iter_mut().zip(x).enumerate() {
        *gi = 4.0 * s * (i + 1) as f64 * xi;
    }
}
