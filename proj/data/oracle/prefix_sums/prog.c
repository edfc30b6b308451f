#include <stdio.h>

int main(void)
{
    long pre[64];
    int n, i, v;
    long best = 0, lowest = 0;

    if (scanf("%d", &n) != 1 || n < 1 || n > 63)
        return 1;
    pre[0] = 0;
    for (i = 1; i <= n; i++) {
        if (scanf("%d", &v) != 1)
            return 1;
        pre[i] = pre[i - 1] + v;
    }
    for (i = 1; i <= n; i++) {
        if (pre[i] - lowest > best)
            best = pre[i] - lowest;
        if (pre[i] < lowest)
            lowest = pre[i];
    }
    printf("total=%ld best=%ld\n", pre[n], best);
    return 0;
}
