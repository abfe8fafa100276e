import torch, time
torch.set_num_threads(1)
from prd_marl.config import default_config
from prd_marl.train import run_train

cfg = default_config('collision_avoidance', 'mappo')
cfg.run.total_updates = 1000
cfg.run.checkpoint_interval = 1000
cfg.run.output_dir = '/root/pkg/_pilot/runs_mappo'
t0 = time.time()
rd = run_train(cfg, seed=0)
print('MAPPO pilot done in', round((time.time()-t0)/60, 1), 'min ->', rd)
