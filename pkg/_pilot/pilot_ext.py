import sys, torch, time
torch.set_num_threads(1)
from prd_marl.config import default_config
from prd_marl.train import run_train

variant = sys.argv[1]
cfg = default_config('collision_avoidance', variant)
cfg.run.total_updates = 2000
cfg.run.checkpoint_interval = 2000
cfg.run.output_dir = f'/root/pkg/_pilot/runs_{variant}_2k'
t0 = time.time()
rd = run_train(cfg, seed=0)
print(variant, 'extended pilot done in', round((time.time()-t0)/60, 1), 'min ->', rd)
