# Reference values frozen into tests/unit/test_zeta.cpp (mpmath, 30 digits).
import mpmath as mp
mp.mp.dps = 30
for t in [60, 100, 1000]:
    print("theta", t, mp.nstr(mp.siegeltheta(t), 20), "Z", mp.nstr(mp.siegelz(t), 20))
for s in [mp.mpc(0.5, 10), mp.mpc(0.5, 49), mp.mpc(2, 30), mp.mpc(-1.5, 20), mp.mpc(0.5, 200)]:
    z = mp.zeta(s); print("zeta", s, mp.nstr(z.real, 20), mp.nstr(z.imag, 20))
print("zeros", mp.nstr(mp.zetazero(10).imag, 20), mp.nstr(mp.zetazero(100).imag, 20))
f = lambda t: abs(mp.zeta(mp.mpf(0.5) + 1j*t))**2
pts = [0] + [mp.mpf(k) for k in range(1, 101)]
mp.mp.dps = 20
print("I1(100)", mp.nstr(mp.quad(f, pts), 16))
