#include <stdio.h>

int main(void)
{
    int a[32];
    int n, i, j, min, t;

    if (scanf("%d", &n) != 1 || n < 1 || n > 32)
        return 1;
    for (i = 0; i < n; i++)
        if (scanf("%d", &a[i]) != 1)
            return 1;
    for (i = 0; i < n - 1; i++) {
        min = i;
        for (j = i + 1; j < n; j++) {
            if (a[j] < a[min])
                min = j;
        }
        if (min != i) {
            t = a[i];
            a[i] = a[min];
            a[min] = t;
        }
    }
    for (i = 0; i < n; i++)
        printf("%d%c", a[i], i == n - 1 ? '\n' : ',');
    return 0;
}
