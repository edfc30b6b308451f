#include <stdio.h>

struct ring {
    int data[8];
    int head;
    int used;
};

int main(void)
{
    struct ring rb;
    int n, i, v, dropped = 0;

    rb.head = 0;
    rb.used = 0;
    if (scanf("%d", &n) != 1)
        return 1;
    for (i = 0; i < n; i++) {
        if (scanf("%d", &v) != 1)
            return 1;
        if (v == 0 && rb.used > 0) {
            rb.used -= 1;
            continue;
        }
        if (rb.used < 8) {
            rb.data[(rb.head + rb.used) % 8] = v;
            rb.used += 1;
        } else {
            dropped++;
        }
    }
    printf("used=%d dropped=%d\n", rb.used, dropped);
    for (i = 0; i < rb.used; i++)
        printf("%d ", rb.data[(rb.head + i) % 8]);
    printf("\n");
    return 0;
}
