#include "chaoswave/pipeline.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <utility>

#include "chaoswave/chaos.hpp"
#include "chaoswave/errors.hpp"
#include "chaoswave/modulate.hpp"
#include "chaoswave/permute.hpp"
#include "chaoswave/stream.hpp"
#include "chaoswave/wavelet.hpp"

namespace chaoswave {

namespace {

constexpr char kMagic[4] = {'C', 'W', 'C', '1'};
constexpr std::size_t kHeaderSize = 4 + 1 + 4 + 4 + 1;

void put_u32_be(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xFF));
    out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
    out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

std::uint32_t get_u32_be(std::span<const std::uint8_t> bytes, std::size_t offset) {
    return (static_cast<std::uint32_t>(bytes[offset]) << 24) |
           (static_cast<std::uint32_t>(bytes[offset + 1]) << 16) |
           (static_cast<std::uint32_t>(bytes[offset + 2]) << 8) |
           static_cast<std::uint32_t>(bytes[offset + 3]);
}

void check_cipher_dims(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0)
        throw ShapeError("image dimensions must be positive");
    if (rows % 2 != 0 || cols % 2 != 0)
        throw ShapeError("image dimensions must be even for level-1 decomposition");
    if (static_cast<std::uint64_t>(rows) * cols >= (1ull << 62))
        throw ShapeError("image dimensions out of range");
}

// Keystream for a stream of `len` bytes: the shuffle-phase bytes extended by
// fresh extractions. When the shuffle phase already supplied more than len
// bytes (large n4 on a tiny image), the surplus is simply not used.
std::vector<std::uint8_t> keystream_for(ChaosEngine& engine, const ShuffleSchedule& schedule,
                                        std::size_t len) {
    if (len >= schedule.key_bytes.size())
        return make_keystream(engine, schedule.key_bytes, len);
    return {schedule.key_bytes.begin(), schedule.key_bytes.begin() + static_cast<std::ptrdiff_t>(len)};
}

struct KeyedMaterial {
    ShuffleSchedule schedule;
    ModSequence mod;
    std::vector<std::uint8_t> keystream;
    ConsumptionLedger ledger;
};

// Regenerates every key-derived artifact in the one true consumption order:
// warm-up, schedule, modulation sequence, keystream extension.
KeyedMaterial derive_material(const SecretKey& key, std::size_t p, std::size_t stream_len) {
    ChaosEngine engine(key);
    KeyedMaterial mat;
    mat.ledger.warmup = ChaosEngine::kWarmup;
    mat.schedule = build_schedule(engine, p, key);
    mat.ledger.shuffle = engine.consumed();
    mat.mod = make_mod_sequence(engine, p);
    mat.ledger.mod_sequence = engine.consumed() - mat.ledger.shuffle;
    mat.keystream = keystream_for(engine, mat.schedule, stream_len);
    mat.ledger.keystream_extension =
        engine.consumed() - mat.ledger.shuffle - mat.ledger.mod_sequence;
    return mat;
}

RealField scrambled_field(const GrayImage& image, const SecretKey& key,
                          const KeyedMaterial& mat) {
    SubBands bands = dwt2(image);
    const std::size_t r = bands.cA.rows;
    const std::size_t c = bands.cA.cols;

    FlatBands flat{std::move(bands.cA.values), std::move(bands.cH.values),
                   std::move(bands.cV.values), std::move(bands.cD.values)};
    shuffle(flat, mat.schedule);
    sign_flip(flat.cA, mat.mod.s);
    modulate(flat.cA, mat.mod.y, key.alpha);

    SubBands modified{RealField(r, c, std::move(flat.cA)), RealField(r, c, std::move(flat.cH)),
                      RealField(r, c, std::move(flat.cV)), RealField(r, c, std::move(flat.cD))};
    return idwt2(modified);
}

// Final gray conversion: round half away from zero, clamp to [0,255].
// Non-finite values (reachable only through wrong-key garbage) become 0.
std::uint8_t to_gray(double v) {
    if (!std::isfinite(v)) return 0;
    const double r = std::round(v);
    if (r <= 0.0) return 0;
    if (r >= 255.0) return 255;
    return static_cast<std::uint8_t>(r);
}

} // namespace

std::vector<std::uint8_t> CipherBlob::to_bytes() const {
    std::vector<std::uint8_t> out;
    out.reserve(kHeaderSize + payload.size());
    out.insert(out.end(), kMagic, kMagic + 4);
    out.push_back(version);
    put_u32_be(out, rows);
    put_u32_be(out, cols);
    out.push_back(mode);
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

CipherBlob CipherBlob::from_bytes(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kHeaderSize)
        throw FormatError("cipher blob: truncated header");
    if (std::memcmp(bytes.data(), kMagic, 4) != 0)
        throw FormatError("cipher blob: bad magic");
    CipherBlob blob;
    blob.version = bytes[4];
    if (blob.version != kVersion)
        throw FormatError("cipher blob: unsupported version");
    blob.rows = get_u32_be(bytes, 5);
    blob.cols = get_u32_be(bytes, 9);
    blob.mode = bytes[13];
    if (blob.mode != kModeExact)
        throw FormatError("cipher blob: unsupported mode");
    const std::uint64_t plane = static_cast<std::uint64_t>(blob.rows) * blob.cols;
    if (plane >= (1ull << 62))
        throw FormatError("cipher blob: dimensions out of range");
    const std::uint64_t expected = 4 * plane;
    if (bytes.size() - kHeaderSize != expected)
        throw FormatError("cipher blob: payload length inconsistent with header");
    blob.payload.assign(bytes.begin() + kHeaderSize, bytes.end());
    return blob;
}

void CipherBlob::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cipher blob: cannot write " + path);
    const auto bytes = to_bytes();
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw IoError("cipher blob: write failed for " + path);
}

CipherBlob CipherBlob::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cipher blob: cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return from_bytes(bytes);
}

CipherBlob encrypt(const GrayImage& image, const SecretKey& key, ConsumptionLedger* ledger) {
    key.validate();
    check_cipher_dims(image.rows, image.cols);
    const std::size_t p = (image.rows / 2) * (image.cols / 2);
    const std::size_t stream_len = 4 * image.rows * image.cols;

    KeyedMaterial mat = derive_material(key, p, stream_len);
    RealField field = scrambled_field(image, key, mat);

    std::vector<std::uint8_t> stream = serialize(field);
    self_diffuse(stream);
    mix(stream, mat.keystream);

    if (ledger) *ledger = mat.ledger;
    CipherBlob blob;
    blob.rows = static_cast<std::uint32_t>(image.rows);
    blob.cols = static_cast<std::uint32_t>(image.cols);
    blob.payload = std::move(stream);
    return blob;
}

GrayImage decrypt(const CipherBlob& blob, const SecretKey& key, ConsumptionLedger* ledger) {
    key.validate();
    check_cipher_dims(blob.rows, blob.cols);
    const std::size_t rows = blob.rows;
    const std::size_t cols = blob.cols;
    if (blob.payload.size() != 4 * rows * cols)
        throw FormatError("cipher blob: payload length inconsistent with header");
    const std::size_t p = (rows / 2) * (cols / 2);

    KeyedMaterial mat = derive_material(key, p, blob.payload.size());

    std::vector<std::uint8_t> stream = blob.payload;
    unmix(stream, mat.keystream);
    inverse_self_diffuse(stream);
    RealField field = deserialize(stream, rows, cols);

    SubBands bands = dwt2(field);
    const std::size_t r = rows / 2;
    const std::size_t c = cols / 2;
    FlatBands flat{std::move(bands.cA.values), std::move(bands.cH.values),
                   std::move(bands.cV.values), std::move(bands.cD.values)};
    demodulate(flat.cA, mat.mod.y, key.alpha);
    sign_flip(flat.cA, mat.mod.s);
    unshuffle(flat, mat.schedule);

    SubBands restored{RealField(r, c, std::move(flat.cA)), RealField(r, c, std::move(flat.cH)),
                      RealField(r, c, std::move(flat.cV)), RealField(r, c, std::move(flat.cD))};
    RealField out = idwt2(restored);

    if (ledger) *ledger = mat.ledger;
    GrayImage image(rows, cols);
    for (std::size_t i = 0; i < out.size(); ++i)
        image.pixels[i] = to_gray(out.values[i]);
    return image;
}

RealField shuffled_preview(const GrayImage& image, const SecretKey& key) {
    key.validate();
    check_cipher_dims(image.rows, image.cols);
    const std::size_t p = (image.rows / 2) * (image.cols / 2);
    // The preview stops before diffusion, so no keystream extension is needed.
    KeyedMaterial mat = derive_material(key, p, 0);
    return scrambled_field(image, key, mat);
}

} // namespace chaoswave
