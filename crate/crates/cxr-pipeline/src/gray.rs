//! Single-channel 8-bit images: decoding, resampling, and pixel access.
//!
//! All pipeline stages operate on [`GrayImage`]. Files are accepted as PNG or
//! JPEG, 8-bit or 16-bit grayscale (16-bit is rescaled to 8-bit by the
//! per-image maximum) or RGB (converted to luma).

use std::fmt;
use std::path::Path;

use ndarray::Array2;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GrayError {
    #[error("image dimensions must be nonzero, got {0}x{1}")]
    EmptyImage(usize, usize),
    #[error("pixel buffer length {got} does not match {w}x{h}")]
    BufferMismatch { got: usize, w: usize, h: usize },
    #[error("failed to read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("failed to decode {path}: {source}")]
    Decode {
        path: String,
        source: image::ImageError,
    },
    #[error("failed to encode {path}: {source}")]
    Encode {
        path: String,
        source: image::ImageError,
    },
}

/// A row-major 8-bit grayscale image.
#[derive(Clone, PartialEq, Eq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

impl fmt::Debug for GrayImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GrayImage({}x{})", self.width, self.height)
    }
}

impl GrayImage {
    pub fn new(width: usize, height: usize, fill: u8) -> Self {
        assert!(width > 0 && height > 0, "image dimensions must be nonzero");
        Self {
            width,
            height,
            pixels: vec![fill; width * height],
        }
    }

    pub fn from_raw(width: usize, height: usize, pixels: Vec<u8>) -> Result<Self, GrayError> {
        if width == 0 || height == 0 {
            return Err(GrayError::EmptyImage(width, height));
        }
        if pixels.len() != width * height {
            return Err(GrayError::BufferMismatch {
                got: pixels.len(),
                w: width,
                h: height,
            });
        }
        Ok(Self {
            width,
            height,
            pixels,
        })
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> u8) -> Self {
        let mut pixels = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                pixels.push(f(x, y));
            }
        }
        Self::from_raw(width, height, pixels).expect("from_fn dimensions")
    }

    /// Build from unit-interval values, clamping and rounding to 8-bit.
    pub fn from_unit(values: &Array2<f64>) -> Self {
        let (h, w) = values.dim();
        Self::from_fn(w, h, |x, y| {
            (values[[y, x]].clamp(0.0, 1.0) * 255.0).round() as u8
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn dimensions(&self) -> (usize, usize) {
        (self.width, self.height)
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.pixels[y * self.width + x]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, v: u8) {
        self.pixels[y * self.width + x] = v;
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn pixels_mut(&mut self) -> &mut [u8] {
        &mut self.pixels
    }

    pub fn histogram(&self) -> [u64; 256] {
        let mut hist = [0u64; 256];
        for &p in &self.pixels {
            hist[p as usize] += 1;
        }
        hist
    }

    pub fn mean(&self) -> f64 {
        let sum: u64 = self.pixels.iter().map(|&p| p as u64).sum();
        sum as f64 / self.pixels.len() as f64
    }

    pub fn min_max(&self) -> (u8, u8) {
        let mut lo = u8::MAX;
        let mut hi = u8::MIN;
        for &p in &self.pixels {
            lo = lo.min(p);
            hi = hi.max(p);
        }
        (lo, hi)
    }

    /// Remap every pixel through a 256-entry lookup table.
    pub fn apply_lut(&self, lut: &[u8; 256]) -> Self {
        Self {
            width: self.width,
            height: self.height,
            pixels: self.pixels.iter().map(|&p| lut[p as usize]).collect(),
        }
    }

    /// Intensities scaled to `[0, 1]`, indexed `[row, col]`.
    pub fn to_unit(&self) -> Array2<f64> {
        Array2::from_shape_fn((self.height, self.width), |(y, x)| {
            self.get(x, y) as f64 / 255.0
        })
    }

    /// Decode a raster file. Grayscale stays as-is, 16-bit is rescaled by the
    /// per-image maximum, anything with color is converted to luma.
    pub fn load(path: impl AsRef<Path>) -> Result<Self, GrayError> {
        let path = path.as_ref();
        let display = path.display().to_string();
        let dynamic = image::open(path).map_err(|source| match source {
            image::ImageError::IoError(source) => GrayError::Io {
                path: display.clone(),
                source,
            },
            source => GrayError::Decode {
                path: display.clone(),
                source,
            },
        })?;
        let (w, h) = (dynamic.width() as usize, dynamic.height() as usize);
        if w == 0 || h == 0 {
            return Err(GrayError::EmptyImage(w, h));
        }
        let pixels = match dynamic {
            image::DynamicImage::ImageLuma8(buf) => buf.into_raw(),
            image::DynamicImage::ImageLuma16(buf) => {
                let raw = buf.into_raw();
                let max = raw.iter().copied().max().unwrap_or(0).max(1) as f64;
                raw.iter()
                    .map(|&v| ((v as f64 / max) * 255.0).round() as u8)
                    .collect()
            }
            other => other.to_luma8().into_raw(),
        };
        Self::from_raw(w, h, pixels)
    }

    pub fn save_png(&self, path: impl AsRef<Path>) -> Result<(), GrayError> {
        let path = path.as_ref();
        let buf = image::GrayImage::from_raw(
            self.width as u32,
            self.height as u32,
            self.pixels.clone(),
        )
        .expect("buffer length matches dimensions");
        buf.save(path).map_err(|source| GrayError::Encode {
            path: path.display().to_string(),
            source,
        })
    }

    /// Area-weighted resampling: every output pixel averages the exact source
    /// rectangle it covers. Preserves regional intensity statistics when
    /// downscaling, which matters for opacity-like features.
    pub fn resize_area(&self, width: usize, height: usize) -> Self {
        assert!(width > 0 && height > 0, "target dimensions must be nonzero");
        if width == self.width && height == self.height {
            return self.clone();
        }
        let sx = self.width as f64 / width as f64;
        let sy = self.height as f64 / height as f64;
        let mut out = Vec::with_capacity(width * height);
        for oy in 0..height {
            let y0 = oy as f64 * sy;
            let y1 = (oy + 1) as f64 * sy;
            let iy0 = y0.floor() as usize;
            let iy1 = (y1.ceil() as usize).min(self.height);
            for ox in 0..width {
                let x0 = ox as f64 * sx;
                let x1 = (ox + 1) as f64 * sx;
                let ix0 = x0.floor() as usize;
                let ix1 = (x1.ceil() as usize).min(self.width);
                let mut acc = 0.0;
                for iy in iy0..iy1 {
                    let wy = overlap(y0, y1, iy as f64, (iy + 1) as f64);
                    if wy == 0.0 {
                        continue;
                    }
                    let row = &self.pixels[iy * self.width..(iy + 1) * self.width];
                    for (ix, &pix) in row.iter().enumerate().take(ix1).skip(ix0) {
                        let wx = overlap(x0, x1, ix as f64, (ix + 1) as f64);
                        acc += wy * wx * pix as f64;
                    }
                }
                out.push((acc / (sx * sy)).round().clamp(0.0, 255.0) as u8);
            }
        }
        Self {
            width,
            height,
            pixels: out,
        }
    }
}

#[inline]
fn overlap(a0: f64, a1: f64, b0: f64, b1: f64) -> f64 {
    (a1.min(b1) - a0.max(b0)).max(0.0)
}
