"""Screenshot cropping: trim renderer chrome down to the content box.

Full-page screenshots of a rendered surface are mostly background. The
cropper samples a 3x3 patch at each corner, takes the modal color as the
background, and bounds every pixel whose any-channel difference from that
background exceeds the tolerance. A fixed margin is added back so judged
images keep a little breathing room.

A fully uniform image crops to the full frame rather than to nothing.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np
from PIL import Image


@dataclass(frozen=True)
class CropBox:
    """Pixel box, right/bottom exclusive, margin already applied."""

    left: int
    top: int
    right: int
    bottom: int

    @property
    def width(self) -> int:
        return self.right - self.left

    @property
    def height(self) -> int:
        return self.bottom - self.top

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.left, self.top, self.right, self.bottom)


def _to_rgb_array(image: "Image.Image | np.ndarray") -> np.ndarray:
    if isinstance(image, np.ndarray):
        arr = image
        if arr.ndim == 2:
            arr = np.stack([arr] * 3, axis=-1)
        return arr[..., :3].astype(np.int16)
    return np.asarray(image.convert("RGB"), dtype=np.int16)


def background_color(arr: np.ndarray) -> np.ndarray:
    """Modal color over the four 3x3 corner patches."""
    h, w = arr.shape[:2]
    ph, pw = min(3, h), min(3, w)
    patches = [
        arr[:ph, :pw], arr[:ph, w - pw:],
        arr[h - ph:, :pw], arr[h - ph:, w - pw:],
    ]
    samples = np.concatenate([p.reshape(-1, arr.shape[2]) for p in patches])
    colors, counts = np.unique(samples, axis=0, return_counts=True)
    return colors[int(np.argmax(counts))]


def crop_to_content(image: "Image.Image | np.ndarray", *,
                    tolerance: int = 8, margin: int = 4) -> CropBox:
    arr = _to_rgb_array(image)
    h, w = arr.shape[:2]
    bg = background_color(arr)
    diff = np.abs(arr - bg).max(axis=2)
    mask = diff > tolerance
    if not mask.any():
        return CropBox(0, 0, w, h)
    rows = np.flatnonzero(mask.any(axis=1))
    cols = np.flatnonzero(mask.any(axis=0))
    return CropBox(
        left=max(0, int(cols[0]) - margin),
        top=max(0, int(rows[0]) - margin),
        right=min(w, int(cols[-1]) + 1 + margin),
        bottom=min(h, int(rows[-1]) + 1 + margin),
    )


def crop_image(image: "Image.Image", box: CropBox) -> "Image.Image":
    return image.crop(box.as_tuple())


def crop_png_bytes(png: bytes, *, tolerance: int = 8, margin: int = 4) -> bytes:
    """Crop an encoded PNG and re-encode it."""
    img = Image.open(io.BytesIO(png))
    box = crop_to_content(img, tolerance=tolerance, margin=margin)
    out = io.BytesIO()
    crop_image(img, box).save(out, format="PNG")
    return out.getvalue()
