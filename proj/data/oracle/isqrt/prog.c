#include <stdio.h>

int main(void)
{
    long n, lo = 0, hi, mid;

    if (scanf("%ld", &n) != 1 || n < 0)
        return 1;
    hi = n < 2 ? n : n / 2 + 1;
    if (hi > 3037000499L)
        hi = 3037000499L;
    while (lo < hi) {
        mid = lo + (hi - lo + 1) / 2;
        if (mid * mid <= n) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    printf("%ld\n", lo);
    return 0;
}
