import torch, time, json
torch.set_num_threads(1)
from prd_marl.config import default_config
from prd_marl.train import run_train

cfg = default_config('collision_avoidance', 'prd-soft')
cfg.run.total_updates = 1000
cfg.run.checkpoint_interval = 200
cfg.run.output_dir = '/root/pkg/_pilot/runs_prd'
t0 = time.time()
rd = run_train(cfg, seed=0)
print('PRD pilot done in', round((time.time()-t0)/60, 1), 'min ->', rd)
