#include <stdio.h>

int main(void)
{
    char line[128];
    int i, idents = 0, ops = 0, depth = 0, maxdepth = 0;

    if (fgets(line, sizeof line, stdin) == NULL)
        return 1;
    for (i = 0; line[i] != '\0'; i++) {
        char c = line[i];
        switch (c) {
        case '(':
            depth += 1;
            if (depth > maxdepth)
                maxdepth = depth;
            break;
        case ')':
            if (depth > 0)
                depth -= 1;
            break;
        case '+':
        case '-':
        case '*':
        case '/':
            ops++;
            break;
        default:
            if (c >= 'a' && c <= 'z')
                idents++;
            break;
        }
    }
    printf("idents=%d ops=%d maxdepth=%d open=%d\n", idents, ops, maxdepth, depth);
    return 0;
}
