#ifndef USER_H
#define USER_H

int user_run(void);

#endif /* USER_H */
