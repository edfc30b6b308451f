#include <stdio.h>

int main(void)
{
    unsigned int hist[8];
    int n, i, v;

    for (i = 0; i < 8; i++)
        hist[i] = 0;
    if (scanf("%d", &n) != 1)
        return 1;
    for (i = 0; i < n; i++) {
        if (scanf("%d", &v) != 1)
            return 1;
        hist[v % 8] += 1;
    }
    for (i = 0; i < 8; i++) {
        if (hist[i] != 0)
            printf("%d:%u ", i, hist[i]);
    }
    printf("\n");
    return 0;
}
