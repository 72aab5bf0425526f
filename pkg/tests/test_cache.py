from cubic_hecke import cache
from cubic_hecke.primes import family_array


def test_roundtrip_and_corruption(tmp_cache):
    key = cache.cache_key("demo", x=1)
    cache.write(key, "hello\n")
    assert cache.read(key) == "hello\n"
    files = [p for p in tmp_cache.iterdir() if p.name.startswith(key) and not p.name.endswith((".sha256", ".lock"))]
    assert files
    files[0].write_text("hellp\n")
    assert cache.read(key) is None  # checksum mismatch is never reused


def test_cached_sieve_recomputes_after_corruption(tmp_cache):
    a = family_array(5000)
    for p in tmp_cache.iterdir():
        if p.suffix == ".csv" or p.name.endswith(".txt"):
            p.write_text(p.read_text().replace("73", "74", 1))
    b = family_array(5000)
    assert (a == b).all()


def test_keys_depend_on_parameters():
    assert cache.cache_key("sieve", X=10) != cache.cache_key("sieve", X=11)
    assert cache.cache_key("sieve", X=10) == cache.cache_key("sieve", X=10)


def test_disabled(tmp_path):
    cache.set_cache_dir("")
    try:
        assert cache.cache_dir() is None
        assert cache.read("anything") is None
    finally:
        cache.set_cache_dir(None)
