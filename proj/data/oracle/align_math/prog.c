#include <stdio.h>

static unsigned long padded(unsigned long addr, unsigned long size, unsigned long align)
{
    unsigned long end = addr + size + align - 1;
    unsigned long mask = align - 1;

    end &= ~mask;
    if (end < addr)
        return 0;
    return end - addr;
}

int main(void)
{
    unsigned long a, s, shift;

    if (scanf("%lu %lu %lu", &a, &s, &shift) != 3)
        return 1;
    shift = shift % 12;
    printf("%lu\n", padded(a, s, 1UL << shift));
    return 0;
}
