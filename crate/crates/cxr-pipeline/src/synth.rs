//! Deterministic synthetic images for examples, smoke experiments, and tests.
//!
//! Real radiographs cannot ship with the repository, so everything runnable
//! out of the box works on generated stand-ins: a chest-like gray image with
//! a bright body and two dark lung fields, matching lung masks for
//! segmentation training, and planted-feature sets where the class is decided
//! by a bright square at a known location.

use ndarray::Array2;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::gray::GrayImage;

/// A chest-radiograph-like image: bright oval torso on a dark background with
/// two darker lung fields, mild vertical shading, and speckle noise.
pub fn synthetic_cxr(width: usize, height: usize, seed: u64) -> GrayImage {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (cw, ch) = (width as f64 / 2.0, height as f64 / 2.0);
    let jitter_x = rng.random_range(-0.05..0.05) * width as f64;
    let jitter_y = rng.random_range(-0.05..0.05) * height as f64;
    let mut img = GrayImage::new(width, height, 0);
    for y in 0..height {
        for x in 0..width {
            let dx = (x as f64 - cw - jitter_x) / (0.46 * width as f64);
            let dy = (y as f64 - ch - jitter_y) / (0.48 * height as f64);
            let body = dx * dx + dy * dy;
            let mut v = if body <= 1.0 { 190.0 - 50.0 * body } else { 25.0 };
            for side in [-1.0, 1.0] {
                let lx = (x as f64 - cw - side * 0.22 * width as f64 - jitter_x)
                    / (0.15 * width as f64);
                let ly = (y as f64 - ch - jitter_y) / (0.30 * height as f64);
                if lx * lx + ly * ly <= 1.0 {
                    v -= 95.0 * (1.0 - (lx * lx + ly * ly));
                }
            }
            v += 12.0 * (y as f64 / height as f64);
            v += rng.random_range(-8.0..8.0);
            img.set(x, y, v.clamp(0.0, 255.0) as u8);
        }
    }
    img
}

/// Ground-truth lung mask matching [`synthetic_cxr`] geometry at jitter zero.
/// Returns the image/mask pair used to exercise segmentation training.
pub fn lung_pair(width: usize, height: usize, seed: u64) -> (GrayImage, Array2<u8>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(31).wrapping_add(7));
    let (cw, ch) = (width as f64 / 2.0, height as f64 / 2.0);
    let sx = rng.random_range(0.12..0.18);
    let sy = rng.random_range(0.26..0.34);
    let mut img = GrayImage::new(width, height, 0);
    let mut mask = Array2::<u8>::zeros((height, width));
    for y in 0..height {
        for x in 0..width {
            let dx = (x as f64 - cw) / (0.46 * width as f64);
            let dy = (y as f64 - ch) / (0.48 * height as f64);
            let mut v: f64 = if dx * dx + dy * dy <= 1.0 { 185.0 } else { 30.0 };
            let mut inside = false;
            for side in [-1.0, 1.0] {
                let lx = (x as f64 - cw - side * 0.22 * width as f64) / (sx * width as f64);
                let ly = (y as f64 - ch) / (sy * height as f64);
                if lx * lx + ly * ly <= 1.0 {
                    v = 70.0;
                    inside = true;
                }
            }
            v += rng.random_range(-6.0..6.0);
            img.set(x, y, v.clamp(0.0, 255.0) as u8);
            if inside {
                mask[[y, x]] = 1;
            }
        }
    }
    (img, mask)
}

/// Planted-feature image: noisy background, optionally with a bright square
/// whose top-left corner is at `corner`.
pub fn planted_square(
    size: usize,
    square: Option<(usize, usize, usize)>, // (x, y, side)
    rng: &mut ChaCha8Rng,
) -> GrayImage {
    let mut img = GrayImage::from_fn(size, size, |_, _| rng.random_range(60..140));
    if let Some((sx, sy, side)) = square {
        for y in sy..(sy + side).min(size) {
            for x in sx..(sx + side).min(size) {
                img.set(x, y, rng.random_range(215..250));
            }
        }
    }
    img
}

/// A labeled two-class planted-feature set: positives carry a bright square at
/// the top-left corner, negatives are noise whose global mean is raised to
/// match, so the square's location is the only reliable signal.
pub fn planted_square_set(n: usize, size: usize, seed: u64) -> Vec<(GrayImage, u8)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let side = size * 2 / 5;
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let label = (i % 2) as u8;
        let img = if label == 1 {
            planted_square(size, Some((2, 2, side)), &mut rng)
        } else {
            // ~same global mean, no localized square
            let lift =
                ((side * side) as f64 / (size * size) as f64 * 132.0).round() as i16;
            let mut img = planted_square(size, None, &mut rng);
            for p in img.pixels_mut() {
                *p = (*p as i16 + lift).clamp(0, 255) as u8;
            }
            img
        };
        out.push((img, label));
    }
    out
}

/// Checkerboard test pattern with the given cell size.
pub fn checkerboard(size: usize, cell: usize, lo: u8, hi: u8) -> GrayImage {
    GrayImage::from_fn(size, size, |x, y| {
        if (x / cell + y / cell) % 2 == 0 {
            lo
        } else {
            hi
        }
    })
}

/// Randomized structured image: smooth directional gradient plus noise pushed
/// through a random gamma curve, giving a skewed histogram with many distinct
/// levels. Used by the enhancement property suites.
pub fn random_structured(size: usize, seed: u64) -> GrayImage {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gamma = rng.random_range(0.35..2.8);
    let angle: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let (gx, gy) = (angle.cos(), angle.sin());
    let offset = rng.random_range(0.0..0.3);
    let scale = rng.random_range(0.5..0.7);
    GrayImage::from_fn(size, size, |x, y| {
        let t = (gx * x as f64 / size as f64 + gy * y as f64 / size as f64 + 1.0) / 2.0;
        let base = offset + scale * t + rng.random_range(-0.08..0.08);
        (base.clamp(0.0, 1.0).powf(gamma) * 255.0).round() as u8
    })
}
