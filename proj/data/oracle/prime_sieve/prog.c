#include <stdio.h>

int main(void)
{
    static char composite[4000];
    int limit, i, j, count = 0;
    long total = 0;

    if (scanf("%d", &limit) != 1 || limit < 2 || limit > 3999)
        return 1;
    for (i = 2; i * i <= limit; i++) {
        if (!composite[i]) {
            for (j = i * i; j <= limit; j += i)
                composite[j] = 1;
        }
    }
    for (i = 2; i <= limit; i++) {
        if (composite[i] == 0) {
            count++;
            total += i;
        }
    }
    printf("%d %ld\n", count, total);
    return 0;
}
