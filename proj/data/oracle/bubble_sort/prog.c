#include <stdio.h>

static void sort(int *a, int n)
{
    int i, j, tmp;

    for (i = 0; i < n - 1; i++) {
        for (j = 0; j < n - 1 - i; j++) {
            if (a[j] > a[j + 1]) {
                tmp = a[j];
                a[j] = a[j + 1];
                a[j + 1] = tmp;
            }
        }
    }
}

int main(void)
{
    int a[64];
    int n, i;

    if (scanf("%d", &n) != 1 || n < 0 || n > 64)
        return 1;
    for (i = 0; i < n; i++) {
        if (scanf("%d", &a[i]) != 1)
            return 1;
    }
    sort(a, n);
    for (i = 0; i < n; i++) {
        if (i > 0)
            printf(" ");
        else
            printf("[");
        printf("%d", a[i]);
    }
    printf("]\n");
    return 0;
}
