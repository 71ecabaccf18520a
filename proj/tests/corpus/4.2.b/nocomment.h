#ifndef NOCOMMENT_H
#define NOCOMMENT_H

int nocomment_fn(void);

#endif
