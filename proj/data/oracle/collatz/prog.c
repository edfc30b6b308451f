#include <stdio.h>

int main(void)
{
    long n;
    int steps = 0;
    long peak;

    if (scanf("%ld", &n) != 1 || n < 1)
        return 1;
    peak = n;
    while (n != 1) {
        if (n % 2 == 0) {
            n = n / 2;
        } else {
            n = 3 * n + 1;
        }
        if (n > peak)
            peak = n;
        steps += 1;
    }
    printf("steps=%d peak=%ld\n", steps, peak);
    return 0;
}
