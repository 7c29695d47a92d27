"""Scene file format: JSON with integer coordinates.

    {"version": 1, "polygon": [[x, y], ...], "blue": [...], "red": [...]}

Parsing enforces every scene invariant and reports the first violation
by name; writing emits a canonical byte representation so that identical
scenes always serialize identically.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from .errors import SceneSyntaxError
from .scene import Scene

FORMAT_VERSION = 1


@dataclass(frozen=True)
class SceneFile:
    """Validated raw file content before geometric interpretation."""

    format_version: int
    polygon: tuple[tuple[int, int], ...]
    blue: tuple[tuple[int, int], ...]
    red: tuple[tuple[int, int], ...]

    @staticmethod
    def from_json(text: str) -> "SceneFile":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise SceneSyntaxError(f"not valid JSON: {e}") from e
        if not isinstance(data, dict):
            raise SceneSyntaxError("top level must be a JSON object")
        missing = {"version", "polygon", "blue", "red"} - set(data)
        if missing:
            raise SceneSyntaxError(f"missing keys: {sorted(missing)}")
        if data["version"] != FORMAT_VERSION:
            raise SceneSyntaxError(f"unsupported version {data['version']!r}")

        def points(key: str) -> tuple[tuple[int, int], ...]:
            raw = data[key]
            if not isinstance(raw, list):
                raise SceneSyntaxError(f"{key} must be a list of [x, y] pairs")
            out = []
            for i, item in enumerate(raw):
                if (not isinstance(item, list) or len(item) != 2
                        or not all(isinstance(c, int) and not isinstance(c, bool) for c in item)):
                    raise SceneSyntaxError(f"{key}[{i}] is not an integer pair")
                out.append((item[0], item[1]))
            return tuple(out)

        return SceneFile(FORMAT_VERSION, points("polygon"), points("blue"), points("red"))

    def to_scene(self, check_general_position: bool = True) -> Scene:
        return Scene.from_ints(blue=self.blue, red=self.red, polygon=self.polygon,
                               check_general_position=check_general_position)


def parse_scene(text: str, check_general_position: bool = True) -> Scene:
    """Parse and fully validate a scene file."""
    return SceneFile.from_json(text).to_scene(check_general_position)


def write_scene(scene: Scene) -> str:
    """Canonical serialization; parse(write(s)) == s."""
    payload = {
        "version": FORMAT_VERSION,
        "polygon": [[p.hx, p.hy] for p in scene.polygon],
        "blue": [[p.hx, p.hy] for p in scene.blue],
        "red": [[p.hx, p.hy] for p in scene.red],
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def scene_digest(scene: Scene) -> str:
    return hashlib.sha256(write_scene(scene).encode()).hexdigest()[:16]


def load_scene(path: str, check_general_position: bool = True) -> Scene:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_scene(fh.read(), check_general_position)


def save_scene(scene: Scene, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(write_scene(scene))
