"""Build every pyramid variant on one backbone hierarchy and inspect it.

Prints output shapes, parameter counts, the superposition residual (zero for
linear builders) and whether level P changes when only the weights of other
levels are perturbed (it must not for variants that build levels independently).

    python3 demos/01_pyramid_variants.py
"""
import numpy as np

from featpyr import BackboneConfig, Pyramid, PyramidConfig, PyramidVariant, Tensor, build_backbone, superposition_residual

bcfg = BackboneConfig()
rng = np.random.default_rng(0)
backbone = build_backbone(bcfg, seed=0, dtype=np.float64)


def hierarchy():
    return backbone(Tensor(rng.uniform(0, 1, (1, 1, 64, 64)))).subset(2)


h1, h2 = hierarchy(), hierarchy()
print(f"{'variant':<26}{'params':>8}  {'shapes':<38}{'superposition':>14}  coupled")
for v in PyramidVariant:
    # a random final R layer so the nonlinear variants actually show it
    p = Pyramid(PyramidConfig(variant=v, zero_init_residual=False), bcfg.level_channels, bcfg.level_sizes,
                seed=0, dtype=np.float64)
    out = p(h1)
    shapes = " ".join("x".join(map(str, out[l].shape[1:])) for l in out)
    res = max(superposition_residual(p, h1, h2, 1.5, -0.7).values())
    first = p.levels[0]
    for name, t in p.params.items():
        if not name.startswith(f"level{first}."):
            t.data = t.data + 0.1
    coupled = not np.array_equal(p(h1)[first].data, out[first].data)
    print(f"{v.value:<26}{p.num_parameters:>8}  {shapes:<38}{res:>14.2e}  {coupled}")
