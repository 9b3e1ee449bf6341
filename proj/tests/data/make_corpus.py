#!/usr/bin/env python3
"""Regenerates the grayscale test images under tests/data/natural.

Sources are the public-domain sample images bundled with scikit-image,
center-cropped to a square, anti-alias resized and written as 8-bit P5.
"""
import pathlib

import numpy as np
import skimage.data
from skimage.color import rgb2gray
from skimage.transform import resize

NAMES = ["camera", "astronaut", "coffee", "chelsea", "coins", "moon",
         "rocket", "clock", "immunohistochemistry", "retina"]


def load(name, side):
    im = getattr(skimage.data, name)()
    im = rgb2gray(im[..., :3]) if im.ndim == 3 else im / 255.0
    h, w = im.shape
    k = min(h, w)
    im = im[(h - k) // 2:(h - k) // 2 + k, (w - k) // 2:(w - k) // 2 + k]
    return np.clip(resize(im, (side, side), anti_aliasing=True), 0.0, 1.0)


def write_pgm(path, im):
    q = np.floor(im * 255.0 + 0.5).astype(np.uint8)
    path.write_bytes(b"P5\n%d %d\n255\n" % (q.shape[1], q.shape[0]) + q.tobytes())


def main():
    out = pathlib.Path(__file__).resolve().parent / "natural"
    out.mkdir(exist_ok=True)
    for name in NAMES:
        write_pgm(out / f"{name}_32.pgm", load(name, 32))
    write_pgm(out / "camera_112.pgm", load("camera", 112))


if __name__ == "__main__":
    main()
