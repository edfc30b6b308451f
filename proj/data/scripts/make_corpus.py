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

"""Writes the bundled function corpus as a canonical dataset file.

Each template is a C function in the style of open-source systems code.
Identifiers, constants and a few statement choices are drawn from a seeded
RNG so the corpus is reproducible.
"""

import argparse
import json
import random
from string import Template

PREFIXES = ["png", "tiff", "ssl", "ext4", "nfs", "usb", "xml", "http", "jpeg",
            "sock", "vfs", "mm", "snd", "drm", "bt", "gif", "zip", "ipc"]
NOUNS = ["buf", "data", "pkt", "blk", "rec", "msg", "frame", "chunk", "entry",
         "node", "hdr", "row", "item", "slot", "page"]
VERBS = ["read", "parse", "copy", "fill", "scan", "decode", "encode", "check",
         "count", "merge", "update", "sum", "find", "pack", "unpack", "split"]
CWES = ["CWE-119", "CWE-120", "CWE-125", "CWE-787", "CWE-190", "CWE-476",
        "CWE-416", "CWE-20", "CWE-189", "CWE-399"]
PROJECTS = ["linux", "openssl", "libtiff", "libpng", "ImageMagick", "FFmpeg",
            "qemu", "php-src", "curl", "wireshark"]

TEMPLATES = [
# 0: bounded copy with while loop and compound assignment
"""int $fn(char *dst, const char *src, int $len)
{
    int n = 0;
    char *p = dst;
    while ($len > 0) {
        *p++ = src[n];
        n++;
        $len -= 1;
    }
    return n;
}
""",
# 1: checksum loop
"""unsigned int $fn(const unsigned char *$buf, size_t $len)
{
    unsigned int sum = 0;
    size_t i;

    for (i = 0; i < $len; i++) {
        sum += $buf[i];
        sum ^= (sum << $s1) | (sum >> $s2);
    }
    if (sum == 0)
        sum = $K;
    return sum;
}
""",
# 2: header validation with if-else
"""static int $fn(const unsigned char *$buf, int $len, int *out)
{
    int version, flags;

    if ($len < $K) {
        return -1;
    } else {
        version = $buf[0];
        flags = $buf[1];
    }
    if (version != $V && flags > 0) {
        *out = flags;
        return 0;
    }
    *out = version * $M + flags;
    return 1;
}
""",
# 3: max element with comparisons
"""int $fn(const int *arr, int count)
{
    int best = arr[0];
    int idx = 0;
    int i;

    for (i = 1; i < count; i++) {
        if (arr[i] > best) {
            best = arr[i];
            idx = i;
        } else {
            best += 0;
        }
    }
    return idx;
}
""",
# 4: arithmetic with nested expression (R1)
"""long $fn(long base, long scale, long offset, int shift)
{
    long total = base * scale + offset * $M - $K;
    long mask;

    mask = (total >> shift) + (base & $K) - offset;
    if (mask <= 0)
        mask = 1;
    total %= mask;
    return total;
}
""",
# 5: packet parse with goto error path
"""static int $fn(struct sk_buff *skb, unsigned int $len)
{
    unsigned char *data = skb->data;
    unsigned int off = 0;
    int err = 0;

    if ($len < $K)
        goto out;
    while (off < $len) {
        unsigned int tlen = data[off + 1];
        if (tlen == 0 || off + tlen > $len) {
            err = -EINVAL;
            goto out;
        }
        off += tlen;
    }
out:
    return err;
}
""",
# 6: string length bounded
"""size_t $fn(const char *s, size_t maxlen)
{
    size_t n = 0;

    while (n < maxlen && s[n] != '\\0')
        n++;
    return n;
}
""",
# 7: matrix-ish nested loops
"""void $fn(int *$buf, int rows, int cols, int factor)
{
    int r, c;

    for (r = 0; r < rows; r++) {
        for (c = 0; c < cols; c++) {
            int v = $buf[r * cols + c];
            if (v >= $K && factor != 0) {
                $buf[r * cols + c] = v / factor;
            } else {
                $buf[r * cols + c] = v * factor + $M;
            }
        }
    }
}
""",
# 8: ring buffer push
"""int $fn(struct ring *rb, const unsigned char *$buf, unsigned int $len)
{
    unsigned int i;
    unsigned int head = rb->head;

    if ($len > rb->size - rb->used)
        return -1;
    for (i = 0; i < $len; i++) {
        rb->data[head] = $buf[i];
        head += 1;
        if (head == rb->size)
            head = 0;
    }
    rb->head = head;
    rb->used += $len;
    return 0;
}
""",
# 9: decode hex digits
"""static int $fn(const char *in, unsigned char *out, int outlen)
{
    int i = 0;
    int hi, lo;

    while (in[2 * i] && i < outlen) {
        hi = in[2 * i];
        lo = in[2 * i + 1];
        if (hi >= 'a')
            hi = hi - 'a' + 10;
        else
            hi = hi - '0';
        if (lo >= 'a')
            lo = lo - 'a' + 10;
        else
            lo = lo - '0';
        out[i] = (unsigned char)(hi * 16 + lo);
        i++;
    }
    return i;
}
""",
# 10: counter with continue (guarded R6/R7)
"""int $fn(const int *vals, int n, int limit)
{
    int i;
    int hits = 0;

    for (i = 0; i < n; i++) {
        if (vals[i] < 0)
            continue;
        if (vals[i] > limit && limit != 0)
            hits += 2;
        else
            hits++;
    }
    return hits;
}
""",
# 11: macro-heavy code
"""static int $fn(struct device *dev, u32 reg, u32 val)
{
    u32 tmp;
    int retries = $K;

    tmp = READ_REG(dev, reg);
    while (retries > 0) {
        if ((tmp & val) == val)
            break;
        udelay($M);
        tmp = READ_REG(dev, reg);
        retries--;
    }
    if (retries == 0) {
        DBG_PRINT("timeout on %x\\n", reg);
        return -ETIMEDOUT;
    } else {
        return 0;
    }
}
""",
# 12: bit reverse
"""unsigned int $fn(unsigned int x, int bits)
{
    unsigned int r = 0;
    int i;

    for (i = 0; i < bits; i++) {
        r <<= 1;
        r |= x & 1;
        x >>= 1;
    }
    return r;
}
""",
# 13: gcd
"""int $fn(int a, int b)
{
    int t;

    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0) {
        t = a % b;
        a = b;
        b = t;
    }
    return a;
}
""",
# 14: binary search
"""int $fn(const int *arr, int n, int key)
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
""",
# 15: scale and clamp
"""int $fn(int value, int num, int den, int lo, int hi)
{
    int scaled;

    if (den == 0)
        return lo;
    scaled = value * num / den + $K;
    if (scaled < lo) {
        scaled = lo;
    } else if (scaled > hi) {
        scaled = hi;
    }
    return scaled;
}
""",
# 16: token counter with switch
"""int $fn(const char *text, int $len)
{
    int words = 0;
    int in_word = 0;
    int i;

    for (i = 0; i < $len; i++) {
        switch (text[i]) {
        case ' ':
        case '\\t':
        case '\\n':
            in_word = 0;
            break;
        default:
            if (!in_word) {
                words++;
                in_word = 1;
            }
            break;
        }
    }
    return words;
}
""",
# 17: table lookup with && condition
"""static const char *$fn(const struct name_map *map, int count, int id)
{
    int i = 0;

    while (i < count) {
        if (map[i].id == id && map[i].name != NULL)
            return map[i].name;
        i += 1;
    }
    return "unknown";
}
""",
# 18: image row filter (libpng style)
"""static void $fn(unsigned char *row, const unsigned char *prev, size_t rowbytes, int bpp)
{
    size_t i;

    for (i = 0; i < rowbytes; i++) {
        int a = i >= (size_t)bpp ? row[i - bpp] : 0;
        int b = prev[i];
        int pa = b - a;
        if (pa < 0)
            pa = -pa;
        if (a > 0 && b > 0)
            row[i] = (unsigned char)(row[i] + (a + b) / 2);
        row[i] &= 0xff;
    }
}
""",
# 19: accumulate with float
"""double $fn(const double *samples, int n, double gain)
{
    double acc = 0.0;
    int i;

    for (i = 0; i < n; i++) {
        if (samples[i] > 1.0) {
            acc += 1.0 * gain;
        } else {
            acc += samples[i] * gain;
        }
    }
    if (n > 0)
        acc /= n;
    return acc;
}
""",
# 20: varint decode
"""static int $fn(const unsigned char *p, const unsigned char *end, unsigned long *out)
{
    unsigned long v = 0;
    int shift = 0;

    while (p < end) {
        unsigned char c = *p++;
        v |= (unsigned long)(c & 0x7f) << shift;
        if ((c & 0x80) == 0) {
            *out = v;
            return 1;
        }
        shift += 7;
        if (shift >= $S)
            return -1;
    }
    return 0;
}
""",
# 21: memset-like fill
"""void $fn(unsigned char *$buf, unsigned char value, int count)
{
    int i = 0;

    while (i < count) {
        $buf[i] = value;
        i++;
    }
}
""",
# 22: reference counting
"""static void $fn(struct object *obj)
{
    if (obj == NULL)
        return;
    obj->refcnt -= 1;
    if (obj->refcnt <= 0) {
        kfree(obj->priv);
        kfree(obj);
    } else {
        obj->last_put = jiffies;
    }
}
""",
# 23: integer parse
"""int $fn(const char *s, int *value)
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
    return 0;
}
""",
# 24: bubble sort
"""void $fn(int *a, int n)
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
""",
# 25: alignment math
"""unsigned long $fn(unsigned long addr, unsigned long size, unsigned long align)
{
    unsigned long end = addr + size + align - 1;
    unsigned long mask = align - 1;

    end &= ~mask;
    if (end < addr)
        return 0;
    return end - addr;
}
""",
# 26: option parse loop with if-else chains
"""static int $fn(int argc, char **argv, struct opts *o)
{
    int i;

    for (i = 1; i < argc; i++) {
        if (argv[i][0] != '-') {
            o->file = argv[i];
        } else if (argv[i][1] == 'v') {
            o->verbose += 1;
        } else {
            o->errors++;
        }
    }
    return o->errors == 0 ? 0 : -1;
}
""",
# 27: histogram
"""void $fn(const unsigned char *$buf, int $len, unsigned int *hist)
{
    int i;

    for (i = 0; i < $K; i++)
        hist[i] = 0;
    for (i = 0; i < $len; i++)
        hist[$buf[i] % $K] += 1;
}
""",
# 28: fixed-point multiply
"""int $fn(int a, int b, int frac)
{
    long long prod = (long long)a * b;
    int r;

    prod += 1LL << (frac - 1);
    r = (int)(prod >> frac);
    if (r > $MAXV || r < -$MAXV) {
        r = r > 0 ? $MAXV : -$MAXV;
    }
    return r;
}
""",
# 29: linked list length
"""int $fn(struct list_node *head, int limit)
{
    int n = 0;
    struct list_node *cur = head;

    while (cur != NULL && n < limit) {
        cur = cur->next;
        n++;
    }
    return n;
}
""",
# 30: RLE decode (vulnerable style: no bound on out)
"""int $fn(const unsigned char *in, int inlen, unsigned char *out)
{
    int i = 0, o = 0;

    while (i + 1 < inlen) {
        int run = in[i];
        unsigned char v = in[i + 1];
        while (run > 0) {
            out[o++] = v;
            run -= 1;
        }
        i += 2;
    }
    return o;
}
""",
# 31: power of two check and round up
"""unsigned int $fn(unsigned int v)
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
""",
# 32: date validation
"""static int $fn(int year, int month, int day)
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
""",
# 33: do-while with compound updates
"""int $fn(unsigned int n)
{
    int digits = 0;

    do {
        n /= 10;
        digits += 1;
    } while (n != 0);
    return digits;
}
""",
# 34: preprocessor conditional inside body
"""static int $fn(struct ctx *c, int $len)
{
    int total = 0;
    int i;

#ifdef CONFIG_DEBUG
    c->calls++;
#endif
    for (i = 0; i < $len; i++) {
        total += c->weights[i];
        if (total > c->cap && c->cap > 0)
            total = c->cap;
    }
    return total;
}
""",
]


def ident(rng, used):
    while True:
        name = "%s_%s_%s" % (rng.choice(PREFIXES), rng.choice(VERBS), rng.choice(NOUNS))
        if name not in used:
            used.add(name)
            return name


def build(count, seed):
    rng = random.Random(seed)
    used = set()
    records = []
    for k in range(count):
        tmpl = TEMPLATES[k % len(TEMPLATES)]
        params = {
            "fn": ident(rng, used),
            "buf": rng.choice(["buf", "data", "src", "payload"]),
            "len": rng.choice(["len", "size", "count", "nbytes"]),
            "K": str(rng.choice([2, 4, 8, 16, 32, 64])),
            "M": str(rng.randint(2, 9)),
            "V": str(rng.randint(1, 5)),
            "S": str(rng.choice([28, 35, 63])),
            "s1": str(rng.randint(1, 7)),
            "s2": str(rng.randint(25, 31)),
            "MAXV": str(rng.choice([32767, 65535, 2147483647])),
        }
        source = Template(tmpl).substitute(params)
        vulnerable = rng.random() < 0.4
        rec = {
            "id": "c%04d" % k,
            "label": 1 if vulnerable else 0,
            "cwe": rng.choice(CWES) if vulnerable else None,
            "cve": ("CVE-%d-%04d" % (rng.randint(2010, 2020), rng.randint(1, 9999))
                    if vulnerable else None),
            "project": rng.choice(PROJECTS),
            "date": "%d-%02d-%02d" % (rng.randint(2012, 2020), rng.randint(1, 12),
                                      rng.randint(1, 28)),
            "provenance": "original",
            "parent_id": None,
            "lineage": [],
            "source": source,
        }
        records.append(rec)
    return records


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=245)
    ap.add_argument("--seed", type=int, default=20240417)
    ap.add_argument("--out", required=True)
    args = ap.parse_args()
    records = build(args.count, args.seed)
    with open(args.out, "w", encoding="utf-8", newline="\n") as f:
        f.write(json.dumps({"schema_version": 1, "format": "vulaug.dataset"},
                           separators=(",", ":")) + "\n")
        for rec in records:
            f.write(json.dumps(rec, separators=(",", ":")) + "\n")


if __name__ == "__main__":
    main()
