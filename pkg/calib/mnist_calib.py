"""MNIST mode calibration: measures the acceptance-criterion quantities."""
import json, time, sys
import numpy as np
from spinlab import dataio, neuronet
from spinlab.actfit import CouplingCurve

tr, te = dataio.mnist_datasets('data/mnist')
out = {}

def report(tag, hist):
    accs = {it: a for it, a in hist.mean_accuracy}
    final = hist.mean_accuracy[-1] if hist.mean_accuracy else None
    first85 = next((it for it, a in hist.mean_accuracy if a >= 0.85), None)
    ranges = neuronet.learned_ranges(hist)
    out[tag] = {
        "final": final, "first85": first85,
        "acc100": accs.get(100), "acc500": accs.get(500),
        "acc550": accs.get(550), "acc700": accs.get(700),
        "ranges": ranges,
        "flags": [(r.diverged, r.stalled_at) for r in hist.runs],
    }
    print(tag, json.dumps(out[tag]), flush=True)
    with open('calib/mnist_calib.json', 'w') as fh:
        json.dump(out, fh, indent=1)

t0 = time.time()
# coupled failure first (fast): coupling curve approximating the device path
coup = CouplingCurve(barrier=7.5, widths=(30e-9, 60e-9, 120e-9, 200e-9),
                     ks=(0.96, 1.15, 1.35, 1.50), cs=(-13.2, -12.0, -11.2, -10.8))
cfg = neuronet.TrainConfig(mode='coupled_kc', coupling=coup, runs=10, iterations=1000)
report('coupled_kc', neuronet.train(tr, te, cfg))
print(f"[{time.time()-t0:.0f}s]", flush=True)

cfg = neuronet.TrainConfig(mode='fixed', runs=10, iterations=1000)
report('fixed', neuronet.train(tr, te, cfg))
print(f"[{time.time()-t0:.0f}s]", flush=True)

cfg = neuronet.TrainConfig(mode='trainable_kc', init_rule='glorot_all', runs=10, iterations=1000)
report('trainable_glorot', neuronet.train(tr, te, cfg))
print(f"[{time.time()-t0:.0f}s]", flush=True)

cfg = neuronet.TrainConfig(mode='hardware_k', init_rule='glorot_w_wide_kc',
                           k_clamp=(0.96, 1.50), runs=10, iterations=1000)
report('hardware_wide', neuronet.train(tr, te, cfg))
print(f"[{time.time()-t0:.0f}s]", flush=True)

cfg = neuronet.TrainConfig(mode='trainable_kc', init_rule='glorot_w_wide_kc', runs=10, iterations=200)
report('trainable_wide200', neuronet.train(tr, te, cfg))
cfg = neuronet.TrainConfig(mode='hardware_k', init_rule='glorot_all',
                           k_clamp=(0.96, 1.50), runs=10, iterations=200)
report('hardware_glorot200', neuronet.train(tr, te, cfg))
print(f"done [{time.time()-t0:.0f}s]", flush=True)
