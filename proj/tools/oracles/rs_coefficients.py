# Taylor coefficients in q = p - 1/2 of the Riemann-Siegel correction terms C0..C4.
# Writes rs_coeffs.json; core/src/rs_coefficients.inc is generated from it by
# rs_to_inc.py. Requires mpmath.
import mpmath as mp
mp.mp.dps=80
pi=mp.pi
def Psi(q):
    p=q+mp.mpf(1)/2
    return mp.cos(2*pi*(p*p-p-mp.mpf(1)/16))/mp.cos(2*pi*p)
# Taylor coefficients at q=0 via Cauchy integral on circle radius 1 (entire function)
M=256; R=mp.mpf(1)
vals=[Psi(R*mp.expjpi(2*mp.mpf(k)/M)) for k in range(M)]
D=70
a=[]
for j in range(D+12+1):
    s=sum(vals[k]*mp.expjpi(-2*mp.mpf(j*k)/M) for k in range(M))/M
    a.append(mp.re(s)/R**j)
def deriv(c,m):
    out=c[:]
    for _ in range(m):
        out=[out[j+1]*(j+1) for j in range(len(out)-1)]
    return out
def comb(terms):
    L=max(len(c) for f,c in terms)
    res=[mp.mpf(0)]*L
    for f,c in terms:
        for j,v in enumerate(c): res[j]+=f*v
    return res
C=[]
C.append(a[:])
C.append(comb([(-1/(96*pi**2),deriv(a,3))]))
C.append(comb([(1/(64*pi**2),deriv(a,2)),(1/(18432*pi**4),deriv(a,6))]))
C.append(comb([(-1/(64*pi**2),deriv(a,1)),(-1/(3840*pi**4),deriv(a,5)),(-1/(5308416*pi**6),deriv(a,9))]))
C.append(comb([(1/(128*pi**2),a),(19/(24576*pi**4),deriv(a,4)),(11/(5898240*pi**6),deriv(a,8)),(1/(2038431744*pi**8),deriv(a,12))]))
out=[]
for k,c in enumerate(C):
    # truncate: |c_j| (1/2)^j < 1e-22
    n=len(c)
    while n>1 and abs(c[n-1])*mp.mpf(0.5)**(n-1)<1e-22: n-=1
    out.append([mp.nstr(v,20) for v in c[:n]])
    print(k,n)
import json; json.dump(out,open('rs_coeffs.json','w'))
# check vs siegelz
def Z(t,K=5):
    t=mp.mpf(t); a=mp.sqrt(t/(2*pi)); N=int(mp.floor(a)); p=a-N; q=p-mp.mpf(1)/2
    th=mp.siegeltheta(t)
    s=2*sum(mp.cos(th-t*mp.log(n))/mp.sqrt(n) for n in range(1,N+1))
    corr=sum(mp.polyval([mp.mpf(x) for x in reversed(out[k])],q)*a**(-k) for k in range(K))
    return s+(-1)**(N-1)*(t/(2*pi))**(-mp.mpf(1)/4)*corr
for t in [50,60,100,200,1000]:
    ref=mp.siegelz(t)
    print(t,[mp.nstr(Z(t,K)-ref,3) for K in (1,2,3,4,5)])
