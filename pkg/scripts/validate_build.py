#!/usr/bin/env python3
"""
Build validation script for CI.

Checks an installed checkout of fuzzy-contrast: every module imports, the
console script declared in pyproject.toml resolves, each optimizer variant
completes a short capped run, and the CLI works end to end on the synthetic
corpus.
"""

import contextlib
import importlib
import io
import pkgutil
import sys
import tempfile
import tomllib
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))
SCRIPT_NAME = "fuzzy-contrast"


def _walk(package: str) -> list[str]:
    module = importlib.import_module(package)
    names = [package]
    for info in pkgutil.walk_packages(module.__path__, prefix=f"{package}."):
        names.append(info.name)
    return names


def validate_imports() -> bool:
    """Import every module under src/ and utils/."""
    print("🔍 Importing modules...")
    ok = True
    for package in ("src", "utils"):
        try:
            names = _walk(package)
        except ImportError as e:
            print(f"❌ {package}: {e}")
            return False
        for name in names:
            try:
                importlib.import_module(name)
            except ImportError as e:
                print(f"❌ {name}: {e}")
                ok = False
        print(f"✅ {package}: {len(names)} modules")
    return ok


def validate_entry_point() -> bool:
    """The console script in pyproject.toml points at a callable."""
    print("\n🔍 Resolving the console script...")
    pyproject = ROOT / "pyproject.toml"
    if not pyproject.exists():
        print("❌ pyproject.toml not found")
        return False

    project = tomllib.loads(pyproject.read_text(encoding="utf-8")).get("project", {})
    target = project.get("scripts", {}).get(SCRIPT_NAME)
    if target is None:
        print(f"❌ [project.scripts] has no '{SCRIPT_NAME}' entry")
        return False

    module_name, _, attribute = target.partition(":")
    try:
        handler = getattr(importlib.import_module(module_name), attribute)
    except (ImportError, AttributeError) as e:
        print(f"❌ {target}: {e}")
        return False
    if not callable(handler):
        print(f"❌ {target} is not callable")
        return False
    print(f"✅ {SCRIPT_NAME} -> {target}")
    return True


def validate_variants() -> bool:
    """Every registered variant runs two capped generations, twice identically."""
    print("\n🔍 Running each variant...")
    try:
        from src.core.models import HyperParams, VariantId
        from src.imaging.synthetic import low_contrast_scene
        from src.optimizers.registry import variant_registry

        hp = HyperParams(max_generations=2, pop_size=4, neighbors_per_gen=3)
        image = low_contrast_scene(32)
        for variant in VariantId:
            first = variant_registry.run(image, variant, hp, seed=1)
            second = variant_registry.run(image, variant, hp, seed=1)
            if len(first.records) != 3:
                print(f"❌ {variant}: expected 3 trace records, got {len(first.records)}")
                return False
            if first.records != second.records:
                print(f"❌ {variant}: capped runs with one seed differ")
                return False
            print(f"✅ {variant}: best F {first.final_f:.4f}")
        return True
    except Exception as e:
        print(f"❌ Variant run failed: {type(e).__name__}: {e}")
        return False


def validate_cli() -> bool:
    """`corpus` then `fitness` and `baseline` through the CLI entry point."""
    print("\n🔍 Exercising the CLI...")
    try:
        from src.cli import main as cli_main

        with tempfile.TemporaryDirectory() as tmp:
            scene = str(Path(tmp) / "scene_gray.png")
            commands = [
                ["--quiet", "corpus", tmp],
                ["--quiet", "fitness", scene],
                ["--quiet", "baseline", scene, "--output", str(Path(tmp) / "eq.png")],
            ]
            for argv in commands:
                with contextlib.redirect_stdout(io.StringIO()):
                    status = cli_main(argv)
                if status != 0:
                    print(f"❌ {argv[1]} command exited with {status}")
                    return False
        print("✅ corpus, fitness and baseline commands")
        return True
    except Exception as e:
        print(f"❌ CLI check failed: {type(e).__name__}: {e}")
        return False


def main():
    """Run all validation checks."""
    print("🚀 Starting build validation...\n")

    checks = [
        ("Module Imports", validate_imports),
        ("Entry Point", validate_entry_point),
        ("Optimizer Variants", validate_variants),
        ("Command Line", validate_cli),
    ]

    all_passed = True
    for name, check in checks:
        print(f"\n{'=' * 50}")
        print(f"Running: {name}")
        print(f"{'=' * 50}")
        if not check():
            all_passed = False

    print(f"\n{'=' * 50}")
    if all_passed:
        print("🎉 All validation checks passed!")
        sys.exit(0)
    print("💥 Some validation checks failed!")
    sys.exit(1)


if __name__ == "__main__":
    main()
