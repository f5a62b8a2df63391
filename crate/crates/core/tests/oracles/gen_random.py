"""Independent reference for gen_random: splitmix64 -> xoshiro256** -> PGSolver text (min convention)."""
import sys

M = (1 << 64) - 1


def splitmix(state):
    while True:
        state = (state + 0x9E3779B97F4A7C15) & M
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & M
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & M
        yield z ^ (z >> 31)


def rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & M


class Xoshiro:
    def __init__(self, seed):
        sm = splitmix(seed)
        self.s = [next(sm) for _ in range(4)]

    def next(self):
        s = self.s
        result = (rotl((s[1] * 5) & M, 7) * 9) & M
        t = (s[1] << 17) & M
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = rotl(s[3], 45)
        return result

    def below(self, bound):
        zone = M - M % bound
        while True:
            x = self.next()
            if x < zone:
                return x % bound


def gen_random(n, d, pmax, seed):
    rng = Xoshiro(seed)
    lines = [f"parity {n - 1};"]
    for v in range(n):
        p = rng.below(pmax + 1)
        owner = rng.below(2)
        k = 1 + rng.below(min(d, n))
        succ = []
        while len(succ) < k:
            w = rng.below(n)
            if w not in succ:
                succ.append(w)
        lines.append(f"{v} {p} {owner} {','.join(map(str, sorted(succ)))};")
    return "\n".join(lines)


if __name__ == "__main__":
    n, d, pmax, seed = map(int, sys.argv[1:5])
    sys.stdout.write(gen_random(n, d, pmax, seed))
