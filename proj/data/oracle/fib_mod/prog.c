#include <stdio.h>

int main(void)
{
    long long a = 0, b = 1, t;
    int n, m, i;

    if (scanf("%d %d", &n, &m) != 2 || m <= 0)
        return 1;
    for (i = 0; i < n; i++) {
        t = a + b;
        a = b;
        b = t % 1000000007LL;
    }
    printf("%lld %lld\n", a, a % m);
    return 0;
}
