#include <stdio.h>

int main(void)
{
    int n, i, v, best, idx = 0, total = 0;

    if (scanf("%d", &n) != 1 || n < 1)
        return 1;
    if (scanf("%d", &best) != 1)
        return 1;
    total = best;
    for (i = 1; i < n; i++) {
        if (scanf("%d", &v) != 1)
            return 1;
        if (v > best) {
            best = v;
            idx = i;
        } else {
            total += v;
        }
    }
    printf("max=%d at %d rest=%d\n", best, idx, total);
    return 0;
}
