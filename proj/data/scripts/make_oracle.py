#!/usr/bin/env python3
# Copyright 2026 The vulaug Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the oracle corpus: self-contained C programs plus stdin cases.

Every program reads whitespace-separated integers from stdin and prints to
stdout. Inputs are drawn from a seeded RNG and stay within ranges where the
programs have no undefined behavior.
"""

import argparse
import os
import random

PROGRAMS = {}


def program(name, gen):
    def wrap(src):
        PROGRAMS[name] = (src, gen)
        return src
    return wrap


def ints(lo, hi, n_lo, n_hi, with_count=True):
    def gen(rng):
        n = rng.randint(n_lo, n_hi)
        vals = [rng.randint(lo, hi) for _ in range(n)]
        return (("%d " % n) if with_count else "") + " ".join(map(str, vals)) + "\n"
    return gen


def fixed(count, lo, hi):
    def gen(rng):
        return " ".join(str(rng.randint(lo, hi)) for _ in range(count)) + "\n"
    return gen


program("bubble_sort", ints(-100, 100, 1, 40))("""#include <stdio.h>

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
    printf("]\\n");
    return 0;
}
""")

program("gcd_lcm", fixed(2, 1, 100000))("""#include <stdio.h>

static long gcd(long a, long b)
{
    long t;

    while (b != 0) {
        t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int main(void)
{
    long a, b, g;

    if (scanf("%ld %ld", &a, &b) != 2)
        return 2;
    g = gcd(a, b);
    if (g > 1 && a % 2 == 0) {
        printf("even-shared ");
    }
    printf("gcd=%ld lcm=%ld\\n", g, a / g * b);
    return g == 1 ? 3 : 0;
}
""")

program("checksum", ints(0, 255, 0, 60))("""#include <stdio.h>

int main(void)
{
    unsigned int sum = 0, x = 0;
    int n, i, v;

    if (scanf("%d", &n) != 1)
        return 1;
    for (i = 0; i < n; i++) {
        if (scanf("%d", &v) != 1)
            return 1;
        sum += (unsigned int)v;
        sum ^= (sum << 5) | (sum >> 27);
        x += (unsigned int)v * 31u + 7u;
    }
    if (sum == 0)
        sum = 1;
    printf("%u %u\\n", sum, x);
    return 0;
}
""")

program("collatz", fixed(1, 1, 5000))("""#include <stdio.h>

int main(void)
{
    long n;
    int steps = 0;
    long peak;

    if (scanf("%ld", &n) != 1 || n < 1)
        return 1;
    peak = n;
    while (n != 1) {
        if (n % 2 == 0) {
            n = n / 2;
        } else {
            n = 3 * n + 1;
        }
        if (n > peak)
            peak = n;
        steps += 1;
    }
    printf("steps=%d peak=%ld\\n", steps, peak);
    return 0;
}
""")

def bsearch_gen(rng):
    n = rng.randint(1, 30)
    vals = sorted(rng.sample(range(-200, 200), n))
    key = rng.choice(vals + [rng.randint(-210, 210)])
    return "%d %s %d\n" % (n, " ".join(map(str, vals)), key)


program("binary_search", bsearch_gen)("""#include <stdio.h>

static int find(const int *arr, int n, int key)
{
    int lo = 0, hi = n - 1;

    while (lo <= hi) {
        int mid = lo + (hi - lo) / 2;
        if (arr[mid] == key)
            return mid;
        if (arr[mid] < key) {
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    return -1;
}

int main(void)
{
    int a[32];
    int n, i, key;

    if (scanf("%d", &n) != 1 || n < 1 || n > 32)
        return 1;
    for (i = 0; i < n; i++)
        if (scanf("%d", &a[i]) != 1)
            return 1;
    if (scanf("%d", &key) != 1)
        return 1;
    printf("%d\\n", find(a, n, key));
    return 0;
}
""")

program("prime_sieve", fixed(1, 2, 3000))("""#include <stdio.h>

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
    printf("%d %ld\\n", count, total);
    return 0;
}
""")

program("rle_encode", ints(0, 3, 1, 50))("""#include <stdio.h>

int main(void)
{
    int vals[64];
    int n, i, run, prev;

    if (scanf("%d", &n) != 1 || n < 1 || n > 64)
        return 1;
    for (i = 0; i < n; i++)
        if (scanf("%d", &vals[i]) != 1)
            return 1;
    prev = vals[0];
    run = 1;
    i = 1;
    while (i < n) {
        if (vals[i] == prev && run < 9) {
            run++;
        } else {
            printf("%dx%d ", run, prev);
            prev = vals[i];
            run = 1;
        }
        i += 1;
    }
    printf("%dx%d\\n", run, prev);
    return 0;
}
""")

program("matrix_mul", lambda rng: "%d\n%s\n" % (
    3, " ".join(str(rng.randint(-9, 9)) for _ in range(18))))("""#include <stdio.h>

int main(void)
{
    int a[3][3], b[3][3], c[3][3];
    int n, i, j, k;

    if (scanf("%d", &n) != 1 || n != 3)
        return 1;
    for (i = 0; i < 9; i++)
        if (scanf("%d", &a[i / 3][i % 3]) != 1)
            return 1;
    for (i = 0; i < 9; i++)
        if (scanf("%d", &b[i / 3][i % 3]) != 1)
            return 1;
    for (i = 0; i < 3; i++) {
        for (j = 0; j < 3; j++) {
            int acc = 0;
            for (k = 0; k < 3; k++)
                acc += a[i][k] * b[k][j];
            c[i][j] = acc;
        }
    }
    for (i = 0; i < 3; i++)
        printf("%d %d %d\\n", c[i][0], c[i][1], c[i][2]);
    return 0;
}
""")

program("fib_mod", fixed(2, 1, 90))("""#include <stdio.h>

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
    printf("%lld %lld\\n", a, a % m);
    return 0;
}
""")

program("digit_stats", fixed(1, 0, 2000000000))("""#include <stdio.h>

int main(void)
{
    unsigned long n;
    int digits = 0, sum = 0, evens = 0;

    if (scanf("%lu", &n) != 1)
        return 1;
    do {
        int d = (int)(n % 10);
        sum += d;
        if (d % 2 == 0 && d != 0)
            evens++;
        n /= 10;
        digits += 1;
    } while (n != 0);
    printf("digits=%d sum=%d evens=%d\\n", digits, sum, evens);
    return digits > 5;
}
""")

program("clamp_scale", lambda rng: " ".join(str(x) for x in [
    rng.randint(-1000, 1000), rng.randint(-50, 50), rng.randint(-20, 20),
    rng.randint(-500, 0), rng.randint(0, 500)]) + "\n")("""#include <stdio.h>

static int scale(int value, int num, int den, int lo, int hi)
{
    int scaled;

    if (den == 0)
        return lo;
    scaled = value * num / den + 4;
    if (scaled < lo) {
        scaled = lo;
    } else if (scaled > hi) {
        scaled = hi;
    }
    return scaled;
}

int main(void)
{
    int v, num, den, lo, hi;

    if (scanf("%d %d %d %d %d", &v, &num, &den, &lo, &hi) != 5)
        return 1;
    printf("%d\\n", scale(v, num, den, lo, hi));
    return 0;
}
""")

program("word_count", lambda rng: " ".join(
    rng.choice(["a", "bb", "ccc", "  ", "\t", "x y", "zz\n"]) for _ in range(rng.randint(1, 30))) + "\n")("""#include <stdio.h>

int main(void)
{
    int c;
    int words = 0, lines = 0, chars = 0;
    int in_word = 0;

    while ((c = getchar()) != EOF) {
        chars++;
        if (c == '\\n')
            lines += 1;
        if (c == ' ' || c == '\\t' || c == '\\n') {
            in_word = 0;
        } else if (!in_word) {
            in_word = 1;
            words++;
        }
    }
    printf("%d %d %d\\n", lines, words, chars);
    return 0;
}
""")

program("bit_ops", fixed(2, 0, 1 << 30))("""#include <stdio.h>

static unsigned int reverse(unsigned int x, int bits)
{
    unsigned int r = 0;
    int i;

    for (i = 0; i < bits; i++) {
        r <<= 1;
        r |= x & 1u;
        x >>= 1;
    }
    return r;
}

static int popcount(unsigned int v)
{
    int c = 0;

    while (v != 0) {
        v &= v - 1u;
        c++;
    }
    return c;
}

int main(void)
{
    unsigned int a, b;

    if (scanf("%u %u", &a, &b) != 2)
        return 1;
    printf("%u %d %d\\n", reverse(a, 16), popcount(a ^ b), popcount(a & b));
    return 0;
}
""")

program("running_max", ints(-1000, 1000, 1, 40))("""#include <stdio.h>

int main(void)
{
    int n, i, v, best, idx = 0, total = 0;

    if (scanf("%d", &n) != 1 || n < 1)
        return 1;
    if (scanf("%d", &best) != 1)
        return 1;
    total = best;
    for (i = 1; i < n; i++) {
        if (scanf("%d", &v) != 1)
            return 1;
        if (v > best) {
            best = v;
            idx = i;
        } else {
            total += v;
        }
    }
    printf("max=%d at %d rest=%d\\n", best, idx, total);
    return 0;
}
""")

program("isqrt", fixed(1, 0, 2000000000))("""#include <stdio.h>

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
    printf("%ld\\n", lo);
    return 0;
}
""")

program("caesar", lambda rng: "%d %s\n" % (rng.randint(0, 25), "".join(
    rng.choice("abcxyzHELLOworld") for _ in range(rng.randint(1, 30)))))("""#include <stdio.h>

int main(void)
{
    char text[64];
    int shift, i;

    if (scanf("%d %63s", &shift, text) != 2)
        return 1;
    for (i = 0; text[i] != '\\0'; i++) {
        char c = text[i];
        if (c >= 'a' && c <= 'z') {
            c = (char)('a' + (c - 'a' + shift) % 26);
        } else if (c >= 'A' && c <= 'Z') {
            c = (char)('A' + (c - 'A' + shift) % 26);
        }
        text[i] = c;
    }
    printf("%s\\n", text);
    return 0;
}
""")

program("histogram", ints(0, 99, 0, 60))("""#include <stdio.h>

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
    printf("\\n");
    return 0;
}
""")

program("date_valid", lambda rng: "%d %d %d\n" % (
    rng.randint(1900, 2100), rng.randint(0, 13), rng.randint(0, 32)))("""#include <stdio.h>

static int valid(int year, int month, int day)
{
    int mdays;

    if (month < 1 || month > 12)
        return 0;
    if (month == 2) {
        int leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
        mdays = 28 + leap;
    } else if (month == 4 || month == 6 || month == 9 || month == 11) {
        mdays = 30;
    } else {
        mdays = 31;
    }
    return day >= 1 && day <= mdays;
}

int main(void)
{
    int y, m, d;

    if (scanf("%d %d %d", &y, &m, &d) != 3)
        return 1;
    if (valid(y, m, d))
        printf("valid\\n");
    else
        printf("invalid\\n");
    return valid(y, m, d) ? 0 : 4;
}
""")

program("parse_int", lambda rng: rng.choice(["-", "", "+"]) + str(rng.randint(0, 99999)) + rng.choice(["", "x", "7"]) + "\n")("""#include <stdio.h>

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
    return *s == '\\0';
}

int main(void)
{
    char buf[32];
    int v, ok;

    if (scanf("%31s", buf) != 1)
        return 1;
    ok = parse(buf, &v);
    printf("%d %d\\n", v, ok);
    return 0;
}
""")

program("round_pow2", fixed(3, 0, 100000))("""#include <stdio.h>

static unsigned int round_up(unsigned int v)
{
    unsigned int r = 1;

    if (v == 0)
        return 1;
    if ((v & (v - 1)) == 0)
        return v;
    while (r < v && r != 0)
        r <<= 1;
    return r;
}

int main(void)
{
    unsigned int a, b, c;

    if (scanf("%u %u %u", &a, &b, &c) != 3)
        return 1;
    printf("%u %u %u\\n", round_up(a), round_up(b), round_up(c));
    return 0;
}
""")

program("varint", ints(0, 255, 1, 12))("""#include <stdio.h>

int main(void)
{
    unsigned char bytes[16];
    unsigned long v = 0;
    int n, i, shift = 0, used = 0;

    if (scanf("%d", &n) != 1 || n < 1 || n > 16)
        return 1;
    for (i = 0; i < n; i++) {
        int t;
        if (scanf("%d", &t) != 1)
            return 1;
        bytes[i] = (unsigned char)t;
    }
    i = 0;
    while (i < n) {
        unsigned char c = bytes[i];
        v |= (unsigned long)(c & 0x7f) << shift;
        used++;
        if ((c & 0x80) == 0)
            break;
        shift += 7;
        if (shift >= 63)
            break;
        i += 1;
    }
    printf("%lu %d\\n", v, used);
    return 0;
}
""")

program("ring_buffer", ints(0, 9, 1, 40))("""#include <stdio.h>

struct ring {
    int data[8];
    int head;
    int used;
};

int main(void)
{
    struct ring rb;
    int n, i, v, dropped = 0;

    rb.head = 0;
    rb.used = 0;
    if (scanf("%d", &n) != 1)
        return 1;
    for (i = 0; i < n; i++) {
        if (scanf("%d", &v) != 1)
            return 1;
        if (v == 0 && rb.used > 0) {
            rb.used -= 1;
            continue;
        }
        if (rb.used < 8) {
            rb.data[(rb.head + rb.used) % 8] = v;
            rb.used += 1;
        } else {
            dropped++;
        }
    }
    printf("used=%d dropped=%d\\n", rb.used, dropped);
    for (i = 0; i < rb.used; i++)
        printf("%d ", rb.data[(rb.head + i) % 8]);
    printf("\\n");
    return 0;
}
""")

program("hex_decode", lambda rng: "".join(rng.choice("0123456789abcdef") for _ in range(2 * rng.randint(1, 15))) + "\n")("""#include <stdio.h>

static int hexval(int c)
{
    if (c >= 'a')
        return c - 'a' + 10;
    else
        return c - '0';
}

int main(void)
{
    char in[64];
    unsigned char out[32];
    int i = 0, total = 0;

    if (scanf("%63s", in) != 1)
        return 1;
    while (in[2 * i] && in[2 * i + 1] && i < 32) {
        int hi = hexval(in[2 * i]);
        int lo = hexval(in[2 * i + 1]);
        out[i] = (unsigned char)(hi * 16 + lo);
        total += out[i];
        i++;
    }
    printf("%d bytes sum=%d first=%d\\n", i, total, i > 0 ? out[0] : -1);
    return 0;
}
""")

program("fixed_point", fixed(3, -30000, 30000))("""#include <stdio.h>

static int fmul(int a, int b, int frac)
{
    long long prod = (long long)a * b;
    int r;

    prod += 1LL << (frac - 1);
    r = (int)(prod >> frac);
    if (r > 32767 || r < -32767) {
        r = r > 0 ? 32767 : -32767;
    }
    return r;
}

int main(void)
{
    int a, b, f;

    if (scanf("%d %d %d", &a, &b, &f) != 3)
        return 1;
    if (f < 0)
        f = -f;
    f = f % 15 + 1;
    printf("%d\\n", fmul(a, b, f));
    return 0;
}
""")

program("selection_sort", ints(-50, 50, 1, 30))("""#include <stdio.h>

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
        printf("%d%c", a[i], i == n - 1 ? '\\n' : ',');
    return 0;
}
""")

program("align_math", fixed(3, 1, 1 << 20))("""#include <stdio.h>

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
    printf("%lu\\n", padded(a, s, 1UL << shift));
    return 0;
}
""")

program("copy_bounded", lambda rng: "%d %s\n" % (rng.randint(0, 20), "".join(
    rng.choice("abcdefgh") for _ in range(rng.randint(1, 20)))))("""#include <stdio.h>
#include <string.h>

static int copy_data(char *dst, const char *src, int cnt)
{
    int n = 0;
    char *p = dst;
    while (cnt) { *p++ = src[n]; n++; cnt -= 1; }
    return n;
}

int main(void)
{
    char src[32], dst[32];
    int cnt, len;

    if (scanf("%d %31s", &cnt, src) != 2)
        return 1;
    len = (int)strlen(src);
    if (cnt > len)
        cnt = len;
    memset(dst, 0, sizeof dst);
    printf("%d %s\\n", copy_data(dst, src, cnt), dst);
    return 0;
}
""")

program("stack_calc", lambda rng: " ".join(
    str(rng.randint(-9, 9)) if rng.random() < 0.6 else str(rng.choice([100, 101, 102]))
    for _ in range(rng.randint(1, 25))) + "\n")("""#include <stdio.h>

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
    printf("depth=%d top=%ld errors=%d\\n", sp, sp > 0 ? stack[sp - 1] : 0L, errors);
    return errors > 3;
}
""")

program("triangle", fixed(3, -5, 40))("""#include <stdio.h>

int main(void)
{
    int a, b, c, kind;

    if (scanf("%d %d %d", &a, &b, &c) != 3)
        return 1;
    if (a <= 0 || b <= 0 || c <= 0) {
        printf("invalid\\n");
        return 2;
    }
    if (a + b <= c || a + c <= b || b + c <= a) {
        printf("degenerate\\n");
        return 0;
    }
    if (a == b && b == c)
        kind = 3;
    else if (a == b || b == c || a == c)
        kind = 2;
    else
        kind = 1;
    printf("kind=%d perimeter=%d\\n", kind, a + b + c);
    return 0;
}
""")

program("prefix_sums", ints(-100, 100, 1, 40))("""#include <stdio.h>

int main(void)
{
    long pre[64];
    int n, i, v;
    long best = 0, lowest = 0;

    if (scanf("%d", &n) != 1 || n < 1 || n > 63)
        return 1;
    pre[0] = 0;
    for (i = 1; i <= n; i++) {
        if (scanf("%d", &v) != 1)
            return 1;
        pre[i] = pre[i - 1] + v;
    }
    for (i = 1; i <= n; i++) {
        if (pre[i] - lowest > best)
            best = pre[i] - lowest;
        if (pre[i] < lowest)
            lowest = pre[i];
    }
    printf("total=%ld best=%ld\\n", pre[n], best);
    return 0;
}
""")

program("float_stats", ints(-500, 500, 1, 30))("""#include <stdio.h>

int main(void)
{
    double acc = 0.0, gain = 0.5, peak = -1e9;
    int n, i, v, over = 0;

    if (scanf("%d", &n) != 1 || n < 1)
        return 1;
    for (i = 0; i < n; i++) {
        if (scanf("%d", &v) != 1)
            return 1;
        if (v * gain > 100.0) {
            acc += 100.0;
            over += 1;
        } else {
            acc += v * gain;
        }
        if (v > peak)
            peak = v;
    }
    acc /= n;
    printf("%.3f %.1f %d\\n", acc, peak, over);
    return 0;
}
""")

program("tokenize_ops", lambda rng: "".join(
    rng.choice("ab1+-*/() ") for _ in range(rng.randint(1, 40))) + "\n")("""#include <stdio.h>

int main(void)
{
    char line[128];
    int i, idents = 0, ops = 0, depth = 0, maxdepth = 0;

    if (fgets(line, sizeof line, stdin) == NULL)
        return 1;
    for (i = 0; line[i] != '\\0'; i++) {
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
    printf("idents=%d ops=%d maxdepth=%d open=%d\\n", idents, ops, maxdepth, depth);
    return 0;
}
""")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", required=True)
    ap.add_argument("--cases", type=int, default=6)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    for name in sorted(PROGRAMS):
        src, gen = PROGRAMS[name]
        d = os.path.join(args.out, name)
        os.makedirs(d, exist_ok=True)
        with open(os.path.join(d, "prog.c"), "w", newline="\n") as f:
            f.write(src)
        for i in range(args.cases):
            with open(os.path.join(d, "input_%d.txt" % i), "w", newline="\n") as f:
                f.write(gen(rng))
    print(len(PROGRAMS), "programs")


if __name__ == "__main__":
    main()
