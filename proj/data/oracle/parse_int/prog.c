#include <stdio.h>

static int parse(const char *s, int *value)
{
    int v = 0;
    int neg = 0;

    if (*s == '-') {
        neg = 1;
        s++;
    }
    while (*s >= '0' && *s <= '9') {
        v = v * 10 + (*s - '0');
        s++;
    }
    if (neg)
        v = -v;
    *value = v;
    return *s == '\0';
}

int main(void)
{
    char buf[32];
    int v, ok;

    if (scanf("%31s", buf) != 1)
        return 1;
    ok = parse(buf, &v);
    printf("%d %d\n", v, ok);
    return 0;
}
