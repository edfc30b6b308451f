#include <stdio.h>

int main(void)
{
    int vals[64];
    int n, i, run, prev;

    if (scanf("%d", &n) != 1 || n < 1 || n > 64)
        return 1;
    for (i = 0; i < n; i++)
        if (scanf("%d", &vals[i]) != 1)
            return 1;
    prev = vals[0];
    run = 1;
    i = 1;
    while (i < n) {
        if (vals[i] == prev && run < 9) {
            run++;
        } else {
            printf("%dx%d ", run, prev);
            prev = vals[i];
            run = 1;
        }
        i += 1;
    }
    printf("%dx%d\n", run, prev);
    return 0;
}
