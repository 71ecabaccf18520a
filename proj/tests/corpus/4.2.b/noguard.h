int noguard_fn(void);
