int no_comment_value = 1;
