//! Histogram-based contrast enhancement and model-input assembly.
//!
//! Four intensity remappings are provided: global histogram equalization,
//! contrast-limited adaptive equalization (tiled, with bilinear blending of
//! tile mappings), bi-histogram equalization with a sigmoid-shaped CDF remap,
//! and histogram matching against a reference image. [`build_stack`] composes
//! the three-plane tensor fed to the classifiers: the resized raw image, its
//! CLAHE enhancement, and its sigmoid bi-histogram enhancement.

use ndarray::{Array2, Array3};
use thiserror::Error;

use crate::gray::GrayImage;

#[derive(Debug, Error)]
pub enum EnhanceError {
    #[error("tile grid {0}x{1} must be at least 1x1")]
    ZeroTileGrid(usize, usize),
    #[error("tile grid {grid_rows}x{grid_cols} exceeds image size {h}x{w}")]
    TileGridTooLarge {
        grid_rows: usize,
        grid_cols: usize,
        h: usize,
        w: usize,
    },
    #[error("clip limit must be >= 1, got {0}")]
    ClipLimitTooSmall(f64),
    #[error("sigmoid slope gamma must be positive, got {0}")]
    InvalidGamma(f64),
}

/// Parameters for the sigmoid bi-histogram enhancement.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct BeasfParams {
    /// Sigmoid slope; larger values push each sub-histogram harder toward its
    /// intensity extremes.
    pub gamma: f64,
}

impl BeasfParams {
    pub fn new(gamma: f64) -> Result<Self, EnhanceError> {
        if !(gamma > 0.0) {
            return Err(EnhanceError::InvalidGamma(gamma));
        }
        Ok(Self { gamma })
    }
}

/// Default tile grid for the adaptive methods.
pub const DEFAULT_TILE_GRID: (usize, usize) = (8, 8);
/// Default contrast clip limit.
pub const DEFAULT_CLIP_LIMIT: f64 = 2.0;
/// Default sigmoid slope for the third stack plane.
pub const DEFAULT_BEASF_GAMMA: f64 = 1.5;
/// Default model-input side length.
pub const DEFAULT_STACK_SIZE: (usize, usize) = (320, 320);

/// Build the equalization lookup table for a histogram.
///
/// The lowest occupied bin maps to 0 and the mapping stretches the cumulative
/// histogram across the full range. A histogram with a single occupied bin
/// yields the identity table.
pub fn equalize_lut(hist: &[u64; 256]) -> [u8; 256] {
    let total: u64 = hist.iter().sum();
    let mut lut = [0u8; 256];
    for (v, slot) in lut.iter_mut().enumerate() {
        *slot = v as u8;
    }
    if total == 0 {
        return lut;
    }
    let first = match hist.iter().position(|&c| c > 0) {
        Some(i) => i,
        None => return lut,
    };
    let cdf_min = hist[first];
    if cdf_min == total {
        // single-bin histogram: identity
        return lut;
    }
    let denom = (total - cdf_min) as f64;
    let mut cum = 0u64;
    for v in 0..256 {
        cum += hist[v];
        let mapped = if cum < cdf_min {
            0.0
        } else {
            255.0 * (cum - cdf_min) as f64 / denom
        };
        lut[v] = mapped.round().clamp(0.0, 255.0) as u8;
    }
    lut
}

/// Global histogram equalization.
pub fn hist_equalize(img: &GrayImage) -> GrayImage {
    let lut = equalize_lut(&img.histogram());
    img.apply_lut(&lut)
}

/// Contrast-limited adaptive histogram equalization.
///
/// `tile_grid` is the number of tiles along (rows, cols); the image is padded
/// by edge replication so the grid divides it evenly and cropped back after
/// mapping. Each tile's histogram is clipped at `clip_limit` times the uniform
/// bin height (excess redistributed evenly) before equalization; pixels are
/// remapped by bilinear interpolation between the four nearest tile mappings.
/// `clip_limit = f64::INFINITY` disables clipping, which makes the single-tile
/// case coincide with plain histogram equalization.
pub fn clahe(
    img: &GrayImage,
    tile_grid: (usize, usize),
    clip_limit: f64,
) -> Result<GrayImage, EnhanceError> {
    let (grid_rows, grid_cols) = tile_grid;
    if grid_rows == 0 || grid_cols == 0 {
        return Err(EnhanceError::ZeroTileGrid(grid_rows, grid_cols));
    }
    let (w, h) = img.dimensions();
    if grid_rows > h || grid_cols > w {
        return Err(EnhanceError::TileGridTooLarge {
            grid_rows,
            grid_cols,
            h,
            w,
        });
    }
    if clip_limit < 1.0 {
        return Err(EnhanceError::ClipLimitTooSmall(clip_limit));
    }

    let tile_h = h.div_ceil(grid_rows);
    let tile_w = w.div_ceil(grid_cols);
    let (ph, pw) = (tile_h * grid_rows, tile_w * grid_cols);
    let padded = pad_replicate(img, pw, ph);

    // One LUT per tile.
    let mut luts = vec![[0u8; 256]; grid_rows * grid_cols];
    for tr in 0..grid_rows {
        for tc in 0..grid_cols {
            let mut hist = [0u64; 256];
            for y in tr * tile_h..(tr + 1) * tile_h {
                for x in tc * tile_w..(tc + 1) * tile_w {
                    hist[padded.get(x, y) as usize] += 1;
                }
            }
            // A single-level tile stays put; redistribution would smear it.
            if hist.iter().filter(|&&c| c > 0).count() > 1 {
                clip_histogram(&mut hist, clip_limit, tile_h * tile_w);
            }
            luts[tr * grid_cols + tc] = equalize_lut(&hist);
        }
    }

    // Bilinear blend of the four surrounding tile LUTs per pixel.
    let mut out = GrayImage::new(w, h, 0);
    for y in 0..h {
        let fy = (y as f64 + 0.5) / tile_h as f64 - 0.5;
        let r0 = fy.floor();
        let wy = fy - r0;
        let r0c = (r0.max(0.0) as usize).min(grid_rows - 1);
        let r1c = ((r0 + 1.0).max(0.0) as usize).min(grid_rows - 1);
        for x in 0..w {
            let fx = (x as f64 + 0.5) / tile_w as f64 - 0.5;
            let c0 = fx.floor();
            let wx = fx - c0;
            let c0c = (c0.max(0.0) as usize).min(grid_cols - 1);
            let c1c = ((c0 + 1.0).max(0.0) as usize).min(grid_cols - 1);
            let v = padded.get(x, y) as usize;
            let blended = (1.0 - wy) * (1.0 - wx) * luts[r0c * grid_cols + c0c][v] as f64
                + (1.0 - wy) * wx * luts[r0c * grid_cols + c1c][v] as f64
                + wy * (1.0 - wx) * luts[r1c * grid_cols + c0c][v] as f64
                + wy * wx * luts[r1c * grid_cols + c1c][v] as f64;
            out.set(x, y, blended.round().clamp(0.0, 255.0) as u8);
        }
    }
    Ok(out)
}

/// Adaptive histogram equalization: tiled equalization without a contrast
/// limit, exposed as the unclipped special case of [`clahe`].
pub fn ahe(img: &GrayImage, tile_grid: (usize, usize)) -> Result<GrayImage, EnhanceError> {
    clahe(img, tile_grid, f64::INFINITY)
}

fn pad_replicate(img: &GrayImage, pw: usize, ph: usize) -> GrayImage {
    let (w, h) = img.dimensions();
    if (pw, ph) == (w, h) {
        return img.clone();
    }
    GrayImage::from_fn(pw, ph, |x, y| img.get(x.min(w - 1), y.min(h - 1)))
}

/// Clip histogram bins at `clip_limit` times the uniform height and spread the
/// excess evenly (remainder goes to the lowest bins). No-op for an infinite
/// limit.
fn clip_histogram(hist: &mut [u64; 256], clip_limit: f64, tile_pixels: usize) {
    if !clip_limit.is_finite() {
        return;
    }
    let limit = ((clip_limit * tile_pixels as f64 / 256.0).round() as u64).max(1);
    let mut excess = 0u64;
    for bin in hist.iter_mut() {
        if *bin > limit {
            excess += *bin - limit;
            *bin = limit;
        }
    }
    if excess == 0 {
        return;
    }
    let per_bin = excess / 256;
    let remainder = (excess % 256) as usize;
    for (i, bin) in hist.iter_mut().enumerate() {
        *bin += per_bin + u64::from(i < remainder);
    }
}

/// Lookup table for the sigmoid bi-histogram enhancement.
///
/// The histogram is split at the floor of the global mean. Each side's CDF is
/// remapped through a normalized logistic curve `S` with slope `gamma`
/// centered at the midpoint of the unit interval (`S(0)=0`, `S(1)=1`), and the
/// two mappings are concatenated over their intensity sub-ranges. This follows
/// the common mean-split bi-histogram formulation; the sigmoid acts on CDF
/// values rather than on intensities, so its center lands on the sub-range
/// midpoint of the output.
pub fn beasf_lut(hist: &[u64; 256], mean: f64, gamma: f64) -> [u8; 256] {
    let split = (mean.floor().clamp(0.0, 255.0)) as usize;
    let n_lower: u64 = hist[..=split].iter().sum();
    let n_upper: u64 = hist[split + 1..].iter().sum();

    let sig = |c: f64| -> f64 {
        let s = |t: f64| 1.0 / (1.0 + (-t).exp());
        let lo = s(-gamma / 2.0);
        let hi = s(gamma / 2.0);
        ((s(gamma * (c - 0.5)) - lo) / (hi - lo)).clamp(0.0, 1.0)
    };

    let mut lut = [0u8; 256];
    let mut cum = 0u64;
    for v in 0..=split {
        cum += hist[v];
        lut[v] = if n_lower == 0 {
            v as u8
        } else {
            let c = cum as f64 / n_lower as f64;
            (split as f64 * sig(c)).round().clamp(0.0, 255.0) as u8
        };
    }
    let upper_span = 255usize.saturating_sub(split + 1) as f64;
    let mut cum_u = 0u64;
    for v in split + 1..256 {
        cum_u += hist[v];
        lut[v] = if n_upper == 0 {
            v as u8
        } else {
            let c = cum_u as f64 / n_upper as f64;
            (split as f64 + 1.0 + upper_span * sig(c))
                .round()
                .clamp(0.0, 255.0) as u8
        };
    }
    lut
}

/// Bi-histogram equalization with an adaptive sigmoid remap of each
/// sub-histogram's CDF. Splits at the global mean; see [`beasf_lut`].
pub fn beasf(img: &GrayImage, params: BeasfParams) -> Result<GrayImage, EnhanceError> {
    if !(params.gamma > 0.0) {
        return Err(EnhanceError::InvalidGamma(params.gamma));
    }
    let lut = beasf_lut(&img.histogram(), img.mean(), params.gamma);
    Ok(img.apply_lut(&lut))
}

/// Lookup table mapping `src` intensities so their CDF approximates `reference`'s.
///
/// For each source level the smallest reference level whose CDF reaches the
/// source CDF is chosen; the comparison is done in exact integer arithmetic.
pub fn match_lut(src_hist: &[u64; 256], ref_hist: &[u64; 256]) -> [u8; 256] {
    let n_src: u64 = src_hist.iter().sum();
    let n_ref: u64 = ref_hist.iter().sum();
    let mut lut = [0u8; 256];
    if n_src == 0 || n_ref == 0 {
        for (v, slot) in lut.iter_mut().enumerate() {
            *slot = v as u8;
        }
        return lut;
    }
    let mut cum_ref = [0u64; 256];
    let mut acc = 0u64;
    for (v, &c) in ref_hist.iter().enumerate() {
        acc += c;
        cum_ref[v] = acc;
    }
    let mut cum_src = 0u64;
    let mut t = 0usize;
    for v in 0..256 {
        cum_src += src_hist[v];
        // smallest t with cum_ref[t]/n_ref >= cum_src/n_src
        while t < 255 && (cum_ref[t] as u128) * (n_src as u128) < (cum_src as u128) * (n_ref as u128)
        {
            t += 1;
        }
        lut[v] = t as u8;
    }
    lut
}

/// Remap `img` so its intensity CDF approximates the reference image's CDF.
pub fn histogram_match(img: &GrayImage, reference: &GrayImage) -> GrayImage {
    let lut = match_lut(&img.histogram(), &reference.histogram());
    img.apply_lut(&lut)
}

/// The three-plane model input: resized raw image, CLAHE enhancement, and
/// sigmoid bi-histogram enhancement, each normalized to `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelStack {
    /// Plane order: 0 = raw normalized, 1 = CLAHE, 2 = sigmoid bi-histogram.
    planes: Array3<f64>,
}

impl ChannelStack {
    pub fn from_planes(planes: Array3<f64>) -> Self {
        assert_eq!(planes.dim().0, 3, "a channel stack has exactly 3 planes");
        Self { planes }
    }

    pub fn planes(&self) -> &Array3<f64> {
        &self.planes
    }

    pub fn into_planes(self) -> Array3<f64> {
        self.planes
    }

    pub fn plane(&self, idx: usize) -> Array2<f64> {
        self.planes
            .index_axis(ndarray::Axis(0), idx)
            .to_owned()
    }

    /// (height, width) of every plane.
    pub fn shape_hw(&self) -> (usize, usize) {
        let d = self.planes.dim();
        (d.1, d.2)
    }
}

/// Parameters for [`build_stack_with`].
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct StackParams {
    pub tile_grid: (usize, usize),
    pub clip_limit: f64,
    pub gamma: f64,
}

impl Default for StackParams {
    fn default() -> Self {
        Self {
            tile_grid: DEFAULT_TILE_GRID,
            clip_limit: DEFAULT_CLIP_LIMIT,
            gamma: DEFAULT_BEASF_GAMMA,
        }
    }
}

/// Resize with area interpolation and assemble the default 3-plane input.
pub fn build_stack(img: &GrayImage, size: (usize, usize)) -> Result<ChannelStack, EnhanceError> {
    build_stack_with(img, size, &StackParams::default())
}

pub fn build_stack_with(
    img: &GrayImage,
    size: (usize, usize),
    params: &StackParams,
) -> Result<ChannelStack, EnhanceError> {
    let (h, w) = size;
    let resized = img.resize_area(w, h);
    let clahe_plane = clahe(&resized, params.tile_grid, params.clip_limit)?;
    let beasf_plane = beasf(&resized, BeasfParams::new(params.gamma)?)?;
    let mut planes = Array3::zeros((3, h, w));
    for y in 0..h {
        for x in 0..w {
            planes[[0, y, x]] = resized.get(x, y) as f64 / 255.0;
            planes[[1, y, x]] = clahe_plane.get(x, y) as f64 / 255.0;
            planes[[2, y, x]] = beasf_plane.get(x, y) as f64 / 255.0;
        }
    }
    Ok(ChannelStack::from_planes(planes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn constant(v: u8) -> GrayImage {
        GrayImage::new(17, 13, v)
    }

    fn is_constant(img: &GrayImage) -> bool {
        let first = img.pixels()[0];
        img.pixels().iter().all(|&p| p == first)
    }

    #[test]
    fn he_constant_image_stays_constant() {
        let out = hist_equalize(&constant(7));
        assert!(is_constant(&out));
        assert_eq!(out.pixels()[0], 7);
    }

    #[test]
    fn he_preserves_extremes_of_two_value_image() {
        let img = GrayImage::from_fn(16, 16, |x, _| if x < 8 { 0 } else { 255 });
        let out = hist_equalize(&img);
        let vals: std::collections::BTreeSet<u8> = out.pixels().iter().copied().collect();
        assert_eq!(vals.into_iter().collect::<Vec<_>>(), vec![0, 255]);
    }

    #[test]
    fn he_matches_per_pixel_cdf_oracle_on_ramp() {
        // 4x4 ramp of 0..16 scaled to 8-bit.
        let img = GrayImage::from_fn(4, 4, |x, y| ((y * 4 + x) * 17) as u8);
        let out = hist_equalize(&img);
        // independent brute-force mapping: count pixels <= v per pixel
        let n = 16u64;
        let pixels: Vec<u8> = img.pixels().to_vec();
        let cdf = |v: u8| pixels.iter().filter(|&&p| p <= v).count() as u64;
        let min_val = *pixels.iter().min().unwrap();
        let cdf_min = cdf(min_val);
        for (i, &p) in pixels.iter().enumerate() {
            let expect =
                (255.0 * (cdf(p) - cdf_min) as f64 / (n - cdf_min) as f64).round() as u8;
            assert_eq!(out.pixels()[i], expect, "pixel {i}");
        }
    }

    #[test]
    fn clahe_constant_image_stays_constant() {
        let out = clahe(&constant(90), (4, 4), 2.0).unwrap();
        assert!(is_constant(&out));
        assert_eq!(out.pixels()[0], 90);
    }

    #[test]
    fn clahe_unclipped_single_tile_equals_he() {
        let img = synth::synthetic_cxr(64, 64, 11);
        let he = hist_equalize(&img);
        let cl = clahe(&img, (1, 1), f64::INFINITY).unwrap();
        for (a, b) in he.pixels().iter().zip(cl.pixels()) {
            assert!((*a as i16 - *b as i16).abs() <= 1);
        }
    }

    #[test]
    fn clahe_rejects_bad_params() {
        let img = constant(5);
        assert!(matches!(
            clahe(&img, (0, 4), 2.0),
            Err(EnhanceError::ZeroTileGrid(..))
        ));
        assert!(matches!(
            clahe(&img, (64, 64), 2.0),
            Err(EnhanceError::TileGridTooLarge { .. })
        ));
        assert!(matches!(
            clahe(&img, (2, 2), 0.5),
            Err(EnhanceError::ClipLimitTooSmall(..))
        ));
    }

    #[test]
    fn beasf_constant_image_stays_constant() {
        let out = beasf(&constant(42), BeasfParams::new(1.5).unwrap()).unwrap();
        assert!(is_constant(&out));
        assert_eq!(out.pixels()[0], 42);
    }

    #[test]
    fn beasf_rejects_nonpositive_gamma() {
        assert!(BeasfParams::new(0.0).is_err());
        assert!(BeasfParams::new(-1.0).is_err());
    }

    #[test]
    fn beasf_matches_brute_force_oracle_on_two_cluster_image() {
        // 8x8 image with one dark and one bright cluster.
        let img = GrayImage::from_fn(8, 8, |x, _| if x < 4 { 40 } else { 200 });
        let gamma = 1.5;
        let out = beasf(&img, BeasfParams::new(gamma).unwrap()).unwrap();

        // Brute-force per-pixel evaluation of the mean-split sigmoid remap.
        let pixels: Vec<u8> = img.pixels().to_vec();
        let mean: f64 = pixels.iter().map(|&p| p as f64).sum::<f64>() / pixels.len() as f64;
        let split = mean.floor() as i32;
        let sigmoid = |t: f64| 1.0 / (1.0 + (-t).exp());
        let s = |c: f64| {
            (sigmoid(gamma * (c - 0.5)) - sigmoid(-gamma / 2.0))
                / (sigmoid(gamma / 2.0) - sigmoid(-gamma / 2.0))
        };
        for (i, &p) in pixels.iter().enumerate() {
            let expect = if (p as i32) <= split {
                let nl = pixels.iter().filter(|&&q| (q as i32) <= split).count() as f64;
                let c = pixels
                    .iter()
                    .filter(|&&q| (q as i32) <= split && q <= p)
                    .count() as f64
                    / nl;
                (split as f64 * s(c)).round() as u8
            } else {
                let nu = pixels.iter().filter(|&&q| (q as i32) > split).count() as f64;
                let c = pixels
                    .iter()
                    .filter(|&&q| (q as i32) > split && q <= p)
                    .count() as f64
                    / nu;
                (split as f64 + 1.0 + (254.0 - split as f64) * s(c)).round() as u8
            };
            assert_eq!(out.pixels()[i], expect, "pixel {i}");
        }
    }

    #[test]
    fn beasf_gamma_sweep_orders_contrast() {
        let img = synth::synthetic_cxr(96, 96, 3);
        let spread = |img: &GrayImage| {
            let mean = img.mean();
            img.pixels()
                .iter()
                .map(|&p| (p as f64 - mean).powi(2))
                .sum::<f64>()
                / img.pixels().len() as f64
        };
        let gammas = [0.5, 1.0, 1.5, 2.0];
        let outs: Vec<GrayImage> = gammas
            .iter()
            .map(|&g| beasf(&img, BeasfParams::new(g).unwrap()).unwrap())
            .collect();
        for pair in outs.windows(2) {
            assert_ne!(pair[0], pair[1], "distinct outputs per gamma");
            assert!(
                spread(&pair[0]) < spread(&pair[1]),
                "spread must grow with gamma"
            );
        }
    }

    #[test]
    fn match_identity_when_reference_is_input() {
        let img = synth::synthetic_cxr(48, 48, 5);
        assert_eq!(histogram_match(&img, &img), img);
    }

    #[test]
    fn match_constant_reference_yields_constant_output() {
        let img = synth::synthetic_cxr(32, 32, 9);
        let reference = constant(99);
        let out = histogram_match(&img, &reference);
        assert!(is_constant(&out));
        assert_eq!(out.pixels()[0], 99);
    }

    #[test]
    fn match_random_to_ramp_has_tiny_kolmogorov_distance() {
        // random 16x16 image with all-distinct values (a shuffled ramp)
        let mut values: Vec<u8> = (0..=255).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        values.shuffle(&mut rng);
        let img = GrayImage::from_raw(16, 16, values).unwrap();
        let reference = GrayImage::from_fn(16, 16, |x, y| (y * 16 + x) as u8);
        let out = histogram_match(&img, &reference);

        let cdf = |img: &GrayImage| -> Vec<f64> {
            let h = img.histogram();
            let n = img.pixels().len() as f64;
            let mut acc = 0u64;
            h.iter()
                .map(|&c| {
                    acc += c;
                    acc as f64 / n
                })
                .collect()
        };
        let (co, cr) = (cdf(&out), cdf(&reference));
        let ks = co
            .iter()
            .zip(&cr)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        assert!(ks <= 1.0 / 256.0 + 1e-12, "ks = {ks}");
    }

    #[test]
    fn match_twice_moves_pixels_at_most_one_level() {
        let img = synth::synthetic_cxr(64, 64, 7);
        let reference = synth::synthetic_cxr(64, 64, 8);
        let once = histogram_match(&img, &reference);
        let twice = histogram_match(&once, &reference);
        for (a, b) in once.pixels().iter().zip(twice.pixels()) {
            assert!((*a as i16 - *b as i16).abs() <= 1);
        }
    }

    #[test]
    fn monotone_luts() {
        let img = synth::synthetic_cxr(64, 64, 13);
        let hist = img.histogram();
        let check = |lut: &[u8; 256], name: &str| {
            for v in 1..256 {
                assert!(lut[v] >= lut[v - 1], "{name} lut not monotone at {v}");
            }
        };
        check(&equalize_lut(&hist), "he");
        check(&beasf_lut(&hist, img.mean(), 1.5), "beasf");
        check(
            &match_lut(&hist, &synth::synthetic_cxr(64, 64, 14).histogram()),
            "match",
        );
    }

    #[test]
    fn stack_has_three_normalized_planes_of_requested_size() {
        let img = synth::synthetic_cxr(100, 80, 4);
        let stack = build_stack(&img, (320, 320)).unwrap();
        assert_eq!(stack.planes().dim(), (3, 320, 320));
        for &v in stack.planes().iter() {
            assert!((0.0..=1.0).contains(&v));
        }
    }

    #[test]
    fn stack_constant_input_gives_constant_planes() {
        let stack = build_stack(&GrayImage::new(64, 64, 120), (32, 32)).unwrap();
        for p in 0..3 {
            let plane = stack.plane(p);
            let first = plane[[0, 0]];
            assert!(plane.iter().all(|&v| v == first), "plane {p}");
        }
    }

    #[test]
    fn stack_beasf_plane_matches_direct_invocation() {
        let img = synth::synthetic_cxr(90, 90, 6);
        let size = 64;
        let stack = build_stack(&img, (size, size)).unwrap();
        let resized = img.resize_area(size, size);
        let direct = beasf(&resized, BeasfParams::new(DEFAULT_BEASF_GAMMA).unwrap()).unwrap();
        let plane = stack.plane(2);
        for y in 0..size {
            for x in 0..size {
                assert_eq!(
                    (plane[[y, x]] * 255.0).round() as u8,
                    direct.get(x, y),
                    "({x},{y})"
                );
            }
        }
    }

    #[test]
    fn stack_is_bit_identical_across_calls() {
        let img = synth::synthetic_cxr(70, 70, 2);
        let a = build_stack(&img, (48, 48)).unwrap();
        let b = build_stack(&img, (48, 48)).unwrap();
        assert_eq!(a, b);
    }
}
