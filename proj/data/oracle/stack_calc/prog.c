#include <stdio.h>

int main(void)
{
    long stack[32];
    int sp = 0, tok, errors = 0;

    while (scanf("%d", &tok) == 1) {
        if (tok < 100) {
            if (sp < 32)
                stack[sp++] = tok;
            else
                errors++;
        } else if (sp >= 2) {
            long b = stack[--sp];
            long a = stack[--sp];
            if (tok == 100)
                stack[sp++] = a + b;
            else if (tok == 101)
                stack[sp++] = a - b;
            else
                stack[sp++] = a * b % 1000003;
        } else {
            errors += 1;
        }
    }
    printf("depth=%d top=%ld errors=%d\n", sp, sp > 0 ? stack[sp - 1] : 0L, errors);
    return errors > 3;
}
