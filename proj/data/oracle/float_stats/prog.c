#include <stdio.h>

int main(void)
{
    double acc = 0.0, gain = 0.5, peak = -1e9;
    int n, i, v, over = 0;

    if (scanf("%d", &n) != 1 || n < 1)
        return 1;
    for (i = 0; i < n; i++) {
        if (scanf("%d", &v) != 1)
            return 1;
        if (v * gain > 100.0) {
            acc += 100.0;
            over += 1;
        } else {
            acc += v * gain;
        }
        if (v > peak)
            peak = v;
    }
    acc /= n;
    printf("%.3f %.1f %d\n", acc, peak, over);
    return 0;
}
