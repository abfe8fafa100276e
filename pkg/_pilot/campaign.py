"""Pre-train the acceptance campaign runs (2 parallel workers)."""
import os, sys, subprocess, time

sys.path.insert(0, "tests")
JOBS = [("prd-soft", s, 200 if s == 0 else 2000) for s in range(5)] + \
       [("mappo", s, 2000) for s in range(5)]

def run_job(variant, seed, interval):
    code = f"""
import torch; torch.set_num_threads(1)
import sys; sys.path.insert(0, "tests")
from test_acceptance import cached_run
print(cached_run({variant!r}, {seed}, checkpoint_interval={interval}))
"""
    return subprocess.Popen(["python3", "-c", code], cwd="/root/pkg",
                            stdout=subprocess.PIPE, stderr=subprocess.STDOUT, text=True)

pending = list(JOBS)
active = []
t0 = time.time()
while pending or active:
    while pending and len(active) < 2:
        job = pending.pop(0)
        print(f"[{time.time()-t0:7.0f}s] start {job}", flush=True)
        active.append((job, run_job(*job)))
    time.sleep(10)
    for item in list(active):
        job, proc = item
        if proc.poll() is not None:
            out = proc.stdout.read().strip().splitlines()
            tail = out[-1] if out else ""
            print(f"[{time.time()-t0:7.0f}s] done {job} rc={proc.returncode} {tail}", flush=True)
            if proc.returncode != 0:
                print("\n".join(out[-20:]), flush=True)
            active.remove(item)
print(f"campaign finished in {(time.time()-t0)/60:.1f} min", flush=True)
