from qgroups.sampledata._load import (load_sample_data, load_slq2, load_sl_t1_2,
                                      load_suq2, load_slq2_without_eprime)
