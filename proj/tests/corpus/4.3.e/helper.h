#ifndef HELPER_H
#define HELPER_H

int helper_fn(void);

#endif /* HELPER_H */
