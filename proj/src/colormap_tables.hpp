// Generated 256-entry RGB tables (matplotlib reference values).
#pragma once

#include <array>
#include <string_view>

namespace presspose::data::detail {

struct LutTable {
  std::string_view name;
  std::array<std::array<float, 3>, 256> rgb;
};

// clang-format off
inline const std::array<LutTable, 18> kBuiltinLuts = {{
  {"viridis", {{{0.267004f,0.004874f,0.329415f},{0.268510f,0.009605f,0.335427f},{0.269944f,0.014625f,0.341379f},{0.271305f,0.019942f,0.347269f},{0.272594f,0.025563f,0.353093f},{0.273809f,0.031497f,0.358853f},{0.274952f,0.037752f,0.364543f},{0.276022f,0.044167f,0.370164f},{0.277018f,0.050344f,0.375715f},{0.277941f,0.056324f,0.381191f},{0.278791f,0.062145f,0.386592f},{0.279566f,0.067836f,0.391917f},{0.280267f,0.073417f,0.397163f},{0.280894f,0.078907f,0.402329f},{0.281446f,0.084320f,0.407414f},{0.281924f,0.089666f,0.412415f},{0.282327f,0.094955f,0.417331f},{0.282656f,0.100196f,0.422160f},{0.282910f,0.105393f,0.426902f},{0.283091f,0.110553f,0.431554f},{0.283197f,0.115680f,0.436115f},{0.283229f,0.120777f,0.440584f},{0.283187f,0.125848f,0.444960f},{0.283072f,0.130895f,0.449241f},{0.282884f,0.135920f,0.453427f},{0.282623f,0.140926f,0.457517f},{0.282290f,0.145912f,0.461510f},{0.281887f,0.150881f,0.465405f},{0.281412f,0.155834f,0.469201f},{0.280868f,0.160771f,0.472899f},{0.280255f,0.165693f,0.476498f},{0.279574f,0.170599f,0.479997f},{0.278826f,0.175490f,0.483397f},{0.278012f,0.180367f,0.486697f},{0.277134f,0.185228f,0.489898f},{0.276194f,0.190074f,0.493001f},{0.275191f,0.194905f,0.496005f},{0.274128f,0.199721f,0.498911f},{0.273006f,0.204520f,0.501721f},{0.271828f,0.209303f,0.504434f},{0.270595f,0.214069f,0.507052f},{0.269308f,0.218818f,0.509577f},{0.267968f,0.223549f,0.512008f},{0.266580f,0.228262f,0.514349f},{0.265145f,0.232956f,0.516599f},{0.263663f,0.237631f,0.518762f},{0.262138f,0.242286f,0.520837f},{0.260571f,0.246922f,0.522828f},{0.258965f,0.251537f,0.524736f},{0.257322f,0.256130f,0.526563f},{0.255645f,0.260703f,0.528312f},{0.253935f,0.265254f,0.529983f},{0.252194f,0.269783f,0.531579f},{0.250425f,0.274290f,0.533103f},{0.248629f,0.278775f,0.534556f},{0.246811f,0.283237f,0.535941f},{0.244972f,0.287675f,0.537260f},{0.243113f,0.292092f,0.538516f},{0.241237f,0.296485f,0.539709f},{0.239346f,0.300855f,0.540844f},{0.237441f,0.305202f,0.541921f},{0.235526f,0.309527f,0.542944f},{0.233603f,0.313828f,0.543914f},{0.231674f,0.318106f,0.544834f},{0.229739f,0.322361f,0.545706f},{0.227802f,0.326594f,0.546532f},{0.225863f,0.330805f,0.547314f},{0.223925f,0.334994f,0.548053f},{0.221989f,0.339161f,0.548752f},{0.220057f,0.343307f,0.549413f},{0.218130f,0.347432f,0.550038f},{0.216210f,0.351535f,0.550627f},{0.214298f,0.355619f,0.551184f},{0.212395f,0.359683f,0.551710f},{0.210503f,0.363727f,0.552206f},{0.208623f,0.367752f,0.552675f},{0.206756f,0.371758f,0.553117f},{0.204903f,0.375746f,0.553533f},{0.203063f,0.379716f,0.553925f},{0.201239f,0.383670f,0.554294f},{0.199430f,0.387607f,0.554642f},{0.197636f,0.391528f,0.554969f},{0.195860f,0.395433f,0.555276f},{0.194100f,0.399323f,0.555565f},{0.192357f,0.403199f,0.555836f},{0.190631f,0.407061f,0.556089f},{0.188923f,0.410910f,0.556326f},{0.187231f,0.414746f,0.556547f},{0.185556f,0.418570f,0.556753f},{0.183898f,0.422383f,0.556944f},{0.182256f,0.426184f,0.557120f},{0.180629f,0.429975f,0.557282f},{0.179019f,0.433756f,0.557430f},{0.177423f,0.437527f,0.557565f},{0.175841f,0.441290f,0.557685f},{0.174274f,0.445044f,0.557792f},{0.172719f,0.448791f,0.557885f},{0.171176f,0.452530f,0.557965f},{0.169646f,0.456262f,0.558030f},{0.168126f,0.459988f,0.558082f},{0.166617f,0.463708f,0.558119f},{0.165117f,0.467423f,0.558141f},{0.163625f,0.471133f,0.558148f},{0.162142f,0.474838f,0.558140f},{0.160665f,0.478540f,0.558115f},{0.159194f,0.482237f,0.558073f},{0.157729f,0.485932f,0.558013f},{0.156270f,0.489624f,0.557936f},{0.154815f,0.493313f,0.557840f},{0.153364f,0.497000f,0.557724f},{0.151918f,0.500685f,0.557587f},{0.150476f,0.504369f,0.557430f},{0.149039f,0.508051f,0.557250f},{0.147607f,0.511733f,0.557049f},{0.146180f,0.515413f,0.556823f},{0.144759f,0.519093f,0.556572f},{0.143343f,0.522773f,0.556295f},{0.141935f,0.526453f,0.555991f},{0.140536f,0.530132f,0.555659f},{0.139147f,0.533812f,0.555298f},{0.137770f,0.537492f,0.554906f},{0.136408f,0.541173f,0.554483f},{0.135066f,0.544853f,0.554029f},{0.133743f,0.548535f,0.553541f},{0.132444f,0.552216f,0.553018f},{0.131172f,0.555899f,0.552459f},{0.129933f,0.559582f,0.551864f},{0.128729f,0.563265f,0.551229f},{0.127568f,0.566949f,0.550556f},{0.126453f,0.570633f,0.549841f},{0.125394f,0.574318f,0.549086f},{0.124395f,0.578002f,0.548287f},{0.123463f,0.581687f,0.547445f},{0.122606f,0.585371f,0.546557f},{0.121831f,0.589055f,0.545623f},{0.121148f,0.592739f,0.544641f},{0.120565f,0.596422f,0.543611f},{0.120092f,0.600104f,0.542530f},{0.119738f,0.603785f,0.541400f},{0.119512f,0.607464f,0.540218f},{0.119423f,0.611141f,0.538982f},{0.119483f,0.614817f,0.537692f},{0.119699f,0.618490f,0.536347f},{0.120081f,0.622161f,0.534946f},{0.120638f,0.625828f,0.533488f},{0.121380f,0.629492f,0.531973f},{0.122312f,0.633153f,0.530398f},{0.123444f,0.636809f,0.528763f},{0.124780f,0.640461f,0.527068f},{0.126326f,0.644107f,0.525311f},{0.128087f,0.647749f,0.523491f},{0.130067f,0.651384f,0.521608f},{0.132268f,0.655014f,0.519661f},{0.134692f,0.658636f,0.517649f},{0.137339f,0.662252f,0.515571f},{0.140210f,0.665859f,0.513427f},{0.143303f,0.669459f,0.511215f},{0.146616f,0.673050f,0.508936f},{0.150148f,0.676631f,0.506589f},{0.153894f,0.680203f,0.504172f},{0.157851f,0.683765f,0.501686f},{0.162016f,0.687316f,0.499129f},{0.166383f,0.690856f,0.496502f},{0.170948f,0.694384f,0.493803f},{0.175707f,0.697900f,0.491033f},{0.180653f,0.701402f,0.488189f},{0.185783f,0.704891f,0.485273f},{0.191090f,0.708366f,0.482284f},{0.196571f,0.711827f,0.479221f},{0.202219f,0.715272f,0.476084f},{0.208030f,0.718701f,0.472873f},{0.214000f,0.722114f,0.469588f},{0.220124f,0.725509f,0.466226f},{0.226397f,0.728888f,0.462789f},{0.232815f,0.732247f,0.459277f},{0.239374f,0.735588f,0.455688f},{0.246070f,0.738910f,0.452024f},{0.252899f,0.742211f,0.448284f},{0.259857f,0.745492f,0.444467f},{0.266941f,0.748751f,0.440573f},{0.274149f,0.751988f,0.436601f},{0.281477f,0.755203f,0.432552f},{0.288921f,0.758394f,0.428426f},{0.296479f,0.761561f,0.424223f},{0.304148f,0.764704f,0.419943f},{0.311925f,0.767822f,0.415586f},{0.319809f,0.770914f,0.411152f},{0.327796f,0.773980f,0.406640f},{0.335885f,0.777018f,0.402049f},{0.344074f,0.780029f,0.397381f},{0.352360f,0.783011f,0.392636f},{0.360741f,0.785964f,0.387814f},{0.369214f,0.788888f,0.382914f},{0.377779f,0.791781f,0.377939f},{0.386433f,0.794644f,0.372886f},{0.395174f,0.797475f,0.367757f},{0.404001f,0.800275f,0.362552f},{0.412913f,0.803041f,0.357269f},{0.421908f,0.805774f,0.351910f},{0.430983f,0.808473f,0.346476f},{0.440137f,0.811138f,0.340967f},{0.449368f,0.813768f,0.335384f},{0.458674f,0.816363f,0.329727f},{0.468053f,0.818921f,0.323998f},{0.477504f,0.821444f,0.318195f},{0.487026f,0.823929f,0.312321f},{0.496615f,0.826376f,0.306377f},{0.506271f,0.828786f,0.300362f},{0.515992f,0.831158f,0.294279f},{0.525776f,0.833491f,0.288127f},{0.535621f,0.835785f,0.281908f},{0.545524f,0.838039f,0.275626f},{0.555484f,0.840254f,0.269281f},{0.565498f,0.842430f,0.262877f},{0.575563f,0.844566f,0.256415f},{0.585678f,0.846661f,0.249897f},{0.595839f,0.848717f,0.243329f},{0.606045f,0.850733f,0.236712f},{0.616293f,0.852709f,0.230052f},{0.626579f,0.854645f,0.223353f},{0.636902f,0.856542f,0.216620f},{0.647257f,0.858400f,0.209861f},{0.657642f,0.860219f,0.203082f},{0.668054f,0.861999f,0.196293f},{0.678489f,0.863742f,0.189503f},{0.688944f,0.865448f,0.182725f},{0.699415f,0.867117f,0.175971f},{0.709898f,0.868751f,0.169257f},{0.720391f,0.870350f,0.162603f},{0.730889f,0.871916f,0.156029f},{0.741388f,0.873449f,0.149561f},{0.751884f,0.874951f,0.143228f},{0.762373f,0.876424f,0.137064f},{0.772852f,0.877868f,0.131109f},{0.783315f,0.879285f,0.125405f},{0.793760f,0.880678f,0.120005f},{0.804182f,0.882046f,0.114965f},{0.814576f,0.883393f,0.110347f},{0.824940f,0.884720f,0.106217f},{0.835270f,0.886029f,0.102646f},{0.845561f,0.887322f,0.099702f},{0.855810f,0.888601f,0.097452f},{0.866013f,0.889868f,0.095953f},{0.876168f,0.891125f,0.095250f},{0.886271f,0.892374f,0.095374f},{0.896320f,0.893616f,0.096335f},{0.906311f,0.894855f,0.098125f},{0.916242f,0.896091f,0.100717f},{0.926106f,0.897330f,0.104071f},{0.935904f,0.898570f,0.108131f},{0.945636f,0.899815f,0.112838f},{0.955300f,0.901065f,0.118128f},{0.964894f,0.902323f,0.123941f},{0.974417f,0.903590f,0.130215f},{0.983868f,0.904867f,0.136897f},{0.993248f,0.906157f,0.143936f}}}},
  {"jet", {{{0.000000f,0.000000f,0.500000f},{0.000000f,0.000000f,0.517825f},{0.000000f,0.000000f,0.535651f},{0.000000f,0.000000f,0.553476f},{0.000000f,0.000000f,0.571301f},{0.000000f,0.000000f,0.589127f},{0.000000f,0.000000f,0.606952f},{0.000000f,0.000000f,0.624777f},{0.000000f,0.000000f,0.642602f},{0.000000f,0.000000f,0.660428f},{0.000000f,0.000000f,0.678253f},{0.000000f,0.000000f,0.696078f},{0.000000f,0.000000f,0.713904f},{0.000000f,0.000000f,0.731729f},{0.000000f,0.000000f,0.749554f},{0.000000f,0.000000f,0.767380f},{0.000000f,0.000000f,0.785205f},{0.000000f,0.000000f,0.803030f},{0.000000f,0.000000f,0.820856f},{0.000000f,0.000000f,0.838681f},{0.000000f,0.000000f,0.856506f},{0.000000f,0.000000f,0.874332f},{0.000000f,0.000000f,0.892157f},{0.000000f,0.000000f,0.909982f},{0.000000f,0.000000f,0.927807f},{0.000000f,0.000000f,0.945633f},{0.000000f,0.000000f,0.963458f},{0.000000f,0.000000f,0.981283f},{0.000000f,0.000000f,0.999109f},{0.000000f,0.000000f,1.000000f},{0.000000f,0.000000f,1.000000f},{0.000000f,0.000000f,1.000000f},{0.000000f,0.001961f,1.000000f},{0.000000f,0.017647f,1.000000f},{0.000000f,0.033333f,1.000000f},{0.000000f,0.049020f,1.000000f},{0.000000f,0.064706f,1.000000f},{0.000000f,0.080392f,1.000000f},{0.000000f,0.096078f,1.000000f},{0.000000f,0.111765f,1.000000f},{0.000000f,0.127451f,1.000000f},{0.000000f,0.143137f,1.000000f},{0.000000f,0.158824f,1.000000f},{0.000000f,0.174510f,1.000000f},{0.000000f,0.190196f,1.000000f},{0.000000f,0.205882f,1.000000f},{0.000000f,0.221569f,1.000000f},{0.000000f,0.237255f,1.000000f},{0.000000f,0.252941f,1.000000f},{0.000000f,0.268627f,1.000000f},{0.000000f,0.284314f,1.000000f},{0.000000f,0.300000f,1.000000f},{0.000000f,0.315686f,1.000000f},{0.000000f,0.331373f,1.000000f},{0.000000f,0.347059f,1.000000f},{0.000000f,0.362745f,1.000000f},{0.000000f,0.378431f,1.000000f},{0.000000f,0.394118f,1.000000f},{0.000000f,0.409804f,1.000000f},{0.000000f,0.425490f,1.000000f},{0.000000f,0.441176f,1.000000f},{0.000000f,0.456863f,1.000000f},{0.000000f,0.472549f,1.000000f},{0.000000f,0.488235f,1.000000f},{0.000000f,0.503922f,1.000000f},{0.000000f,0.519608f,1.000000f},{0.000000f,0.535294f,1.000000f},{0.000000f,0.550980f,1.000000f},{0.000000f,0.566667f,1.000000f},{0.000000f,0.582353f,1.000000f},{0.000000f,0.598039f,1.000000f},{0.000000f,0.613725f,1.000000f},{0.000000f,0.629412f,1.000000f},{0.000000f,0.645098f,1.000000f},{0.000000f,0.660784f,1.000000f},{0.000000f,0.676471f,1.000000f},{0.000000f,0.692157f,1.000000f},{0.000000f,0.707843f,1.000000f},{0.000000f,0.723529f,1.000000f},{0.000000f,0.739216f,1.000000f},{0.000000f,0.754902f,1.000000f},{0.000000f,0.770588f,1.000000f},{0.000000f,0.786275f,1.000000f},{0.000000f,0.801961f,1.000000f},{0.000000f,0.817647f,1.000000f},{0.000000f,0.833333f,1.000000f},{0.000000f,0.849020f,1.000000f},{0.000000f,0.864706f,0.996205f},{0.000000f,0.880392f,0.983555f},{0.000000f,0.896078f,0.970904f},{0.009488f,0.911765f,0.958254f},{0.022138f,0.927451f,0.945604f},{0.034788f,0.943137f,0.932954f},{0.047438f,0.958824f,0.920304f},{0.060089f,0.974510f,0.907653f},{0.072739f,0.990196f,0.895003f},{0.085389f,1.000000f,0.882353f},{0.098039f,1.000000f,0.869703f},{0.110689f,1.000000f,0.857052f},{0.123340f,1.000000f,0.844402f},{0.135990f,1.000000f,0.831752f},{0.148640f,1.000000f,0.819102f},{0.161290f,1.000000f,0.806452f},{0.173941f,1.000000f,0.793801f},{0.186591f,1.000000f,0.781151f},{0.199241f,1.000000f,0.768501f},{0.211891f,1.000000f,0.755851f},{0.224541f,1.000000f,0.743201f},{0.237192f,1.000000f,0.730550f},{0.249842f,1.000000f,0.717900f},{0.262492f,1.000000f,0.705250f},{0.275142f,1.000000f,0.692600f},{0.287793f,1.000000f,0.679949f},{0.300443f,1.000000f,0.667299f},{0.313093f,1.000000f,0.654649f},{0.325743f,1.000000f,0.641999f},{0.338393f,1.000000f,0.629349f},{0.351044f,1.000000f,0.616698f},{0.363694f,1.000000f,0.604048f},{0.376344f,1.000000f,0.591398f},{0.388994f,1.000000f,0.578748f},{0.401645f,1.000000f,0.566097f},{0.414295f,1.000000f,0.553447f},{0.426945f,1.000000f,0.540797f},{0.439595f,1.000000f,0.528147f},{0.452245f,1.000000f,0.515497f},{0.464896f,1.000000f,0.502846f},{0.477546f,1.000000f,0.490196f},{0.490196f,1.000000f,0.477546f},{0.502846f,1.000000f,0.464896f},{0.515497f,1.000000f,0.452245f},{0.528147f,1.000000f,0.439595f},{0.540797f,1.000000f,0.426945f},{0.553447f,1.000000f,0.414295f},{0.566097f,1.000000f,0.401645f},{0.578748f,1.000000f,0.388994f},{0.591398f,1.000000f,0.376344f},{0.604048f,1.000000f,0.363694f},{0.616698f,1.000000f,0.351044f},{0.629349f,1.000000f,0.338393f},{0.641999f,1.000000f,0.325743f},{0.654649f,1.000000f,0.313093f},{0.667299f,1.000000f,0.300443f},{0.679949f,1.000000f,0.287793f},{0.692600f,1.000000f,0.275142f},{0.705250f,1.000000f,0.262492f},{0.717900f,1.000000f,0.249842f},{0.730550f,1.000000f,0.237192f},{0.743201f,1.000000f,0.224541f},{0.755851f,1.000000f,0.211891f},{0.768501f,1.000000f,0.199241f},{0.781151f,1.000000f,0.186591f},{0.793801f,1.000000f,0.173941f},{0.806452f,1.000000f,0.161290f},{0.819102f,1.000000f,0.148640f},{0.831752f,1.000000f,0.135990f},{0.844402f,1.000000f,0.123340f},{0.857052f,1.000000f,0.110689f},{0.869703f,1.000000f,0.098039f},{0.882353f,1.000000f,0.085389f},{0.895003f,1.000000f,0.072739f},{0.907653f,1.000000f,0.060089f},{0.920304f,1.000000f,0.047438f},{0.932954f,1.000000f,0.034788f},{0.945604f,0.988381f,0.022138f},{0.958254f,0.973856f,0.009488f},{0.970904f,0.959332f,0.000000f},{0.983555f,0.944808f,0.000000f},{0.996205f,0.930283f,0.000000f},{1.000000f,0.915759f,0.000000f},{1.000000f,0.901235f,0.000000f},{1.000000f,0.886710f,0.000000f},{1.000000f,0.872186f,0.000000f},{1.000000f,0.857662f,0.000000f},{1.000000f,0.843137f,0.000000f},{1.000000f,0.828613f,0.000000f},{1.000000f,0.814089f,0.000000f},{1.000000f,0.799564f,0.000000f},{1.000000f,0.785040f,0.000000f},{1.000000f,0.770516f,0.000000f},{1.000000f,0.755991f,0.000000f},{1.000000f,0.741467f,0.000000f},{1.000000f,0.726943f,0.000000f},{1.000000f,0.712418f,0.000000f},{1.000000f,0.697894f,0.000000f},{1.000000f,0.683370f,0.000000f},{1.000000f,0.668845f,0.000000f},{1.000000f,0.654321f,0.000000f},{1.000000f,0.639797f,0.000000f},{1.000000f,0.625272f,0.000000f},{1.000000f,0.610748f,0.000000f},{1.000000f,0.596224f,0.000000f},{1.000000f,0.581699f,0.000000f},{1.000000f,0.567175f,0.000000f},{1.000000f,0.552651f,0.000000f},{1.000000f,0.538126f,0.000000f},{1.000000f,0.523602f,0.000000f},{1.000000f,0.509078f,0.000000f},{1.000000f,0.494553f,0.000000f},{1.000000f,0.480029f,0.000000f},{1.000000f,0.465505f,0.000000f},{1.000000f,0.450980f,0.000000f},{1.000000f,0.436456f,0.000000f},{1.000000f,0.421932f,0.000000f},{1.000000f,0.407407f,0.000000f},{1.000000f,0.392883f,0.000000f},{1.000000f,0.378359f,0.000000f},{1.000000f,0.363834f,0.000000f},{1.000000f,0.349310f,0.000000f},{1.000000f,0.334786f,0.000000f},{1.000000f,0.320261f,0.000000f},{1.000000f,0.305737f,0.000000f},{1.000000f,0.291213f,0.000000f},{1.000000f,0.276688f,0.000000f},{1.000000f,0.262164f,0.000000f},{1.000000f,0.247640f,0.000000f},{1.000000f,0.233115f,0.000000f},{1.000000f,0.218591f,0.000000f},{1.000000f,0.204067f,0.000000f},{1.000000f,0.189542f,0.000000f},{1.000000f,0.175018f,0.000000f},{1.000000f,0.160494f,0.000000f},{1.000000f,0.145969f,0.000000f},{1.000000f,0.131445f,0.000000f},{1.000000f,0.116921f,0.000000f},{1.000000f,0.102397f,0.000000f},{1.000000f,0.087872f,0.000000f},{0.999109f,0.073348f,0.000000f},{0.981283f,0.058824f,0.000000f},{0.963458f,0.044299f,0.000000f},{0.945633f,0.029775f,0.000000f},{0.927807f,0.015251f,0.000000f},{0.909982f,0.000726f,0.000000f},{0.892157f,0.000000f,0.000000f},{0.874332f,0.000000f,0.000000f},{0.856506f,0.000000f,0.000000f},{0.838681f,0.000000f,0.000000f},{0.820856f,0.000000f,0.000000f},{0.803030f,0.000000f,0.000000f},{0.785205f,0.000000f,0.000000f},{0.767380f,0.000000f,0.000000f},{0.749554f,0.000000f,0.000000f},{0.731729f,0.000000f,0.000000f},{0.713904f,0.000000f,0.000000f},{0.696078f,0.000000f,0.000000f},{0.678253f,0.000000f,0.000000f},{0.660428f,0.000000f,0.000000f},{0.642602f,0.000000f,0.000000f},{0.624777f,0.000000f,0.000000f},{0.606952f,0.000000f,0.000000f},{0.589127f,0.000000f,0.000000f},{0.571301f,0.000000f,0.000000f},{0.553476f,0.000000f,0.000000f},{0.535651f,0.000000f,0.000000f},{0.517825f,0.000000f,0.000000f},{0.500000f,0.000000f,0.000000f}}}},
  {"hsv", {{{1.000000f,0.000000f,0.000000f},{1.000000f,0.023162f,0.000000f},{1.000000f,0.046324f,0.000000f},{1.000000f,0.069485f,0.000000f},{1.000000f,0.092647f,0.000000f},{1.000000f,0.115809f,0.000000f},{1.000000f,0.138971f,0.000000f},{1.000000f,0.162133f,0.000000f},{1.000000f,0.185294f,0.000000f},{1.000000f,0.208456f,0.000000f},{1.000000f,0.231618f,0.000000f},{1.000000f,0.254780f,0.000000f},{1.000000f,0.277941f,0.000000f},{1.000000f,0.301103f,0.000000f},{1.000000f,0.324265f,0.000000f},{1.000000f,0.347427f,0.000000f},{1.000000f,0.370589f,0.000000f},{1.000000f,0.393750f,0.000000f},{1.000000f,0.416912f,0.000000f},{1.000000f,0.440074f,0.000000f},{1.000000f,0.463236f,0.000000f},{1.000000f,0.486398f,0.000000f},{1.000000f,0.509559f,0.000000f},{1.000000f,0.532721f,0.000000f},{1.000000f,0.555883f,0.000000f},{1.000000f,0.579045f,0.000000f},{1.000000f,0.602206f,0.000000f},{1.000000f,0.625368f,0.000000f},{1.000000f,0.648530f,0.000000f},{1.000000f,0.671692f,0.000000f},{1.000000f,0.694854f,0.000000f},{1.000000f,0.718015f,0.000000f},{1.000000f,0.741177f,0.000000f},{1.000000f,0.764339f,0.000000f},{1.000000f,0.787501f,0.000000f},{1.000000f,0.810663f,0.000000f},{1.000000f,0.833824f,0.000000f},{1.000000f,0.856986f,0.000000f},{1.000000f,0.880148f,0.000000f},{1.000000f,0.903310f,0.000000f},{1.000000f,0.926472f,0.000000f},{0.995956f,0.945589f,0.000000f},{0.988235f,0.961030f,0.000000f},{0.980514f,0.976471f,0.000000f},{0.972794f,0.991912f,0.000000f},{0.957720f,1.000000f,0.000000f},{0.934558f,1.000000f,0.000000f},{0.911396f,1.000000f,0.000000f},{0.888234f,1.000000f,0.000000f},{0.865072f,1.000000f,0.000000f},{0.841911f,1.000000f,0.000000f},{0.818749f,1.000000f,0.000000f},{0.795587f,1.000000f,0.000000f},{0.772425f,1.000000f,0.000000f},{0.749263f,1.000000f,0.000000f},{0.726102f,1.000000f,0.000000f},{0.702940f,1.000000f,0.000000f},{0.679778f,1.000000f,0.000000f},{0.656616f,1.000000f,0.000000f},{0.633455f,1.000000f,0.000000f},{0.610293f,1.000000f,0.000000f},{0.587131f,1.000000f,0.000000f},{0.563969f,1.000000f,0.000000f},{0.540807f,1.000000f,0.000000f},{0.517646f,1.000000f,0.000000f},{0.494484f,1.000000f,0.000000f},{0.471322f,1.000000f,0.000000f},{0.448160f,1.000000f,0.000000f},{0.424998f,1.000000f,0.000000f},{0.401837f,1.000000f,0.000000f},{0.378675f,1.000000f,0.000000f},{0.355513f,1.000000f,0.000000f},{0.332351f,1.000000f,0.000000f},{0.309189f,1.000000f,0.000000f},{0.286028f,1.000000f,0.000000f},{0.262866f,1.000000f,0.000000f},{0.239704f,1.000000f,0.000000f},{0.216542f,1.000000f,0.000000f},{0.193381f,1.000000f,0.000000f},{0.170219f,1.000000f,0.000000f},{0.147057f,1.000000f,0.000000f},{0.123895f,1.000000f,0.000000f},{0.100733f,1.000000f,0.000000f},{0.077572f,1.000000f,0.000000f},{0.054410f,1.000000f,0.000000f},{0.031249f,1.000000f,0.000001f},{0.023529f,1.000000f,0.015443f},{0.015808f,1.000000f,0.030884f},{0.008088f,1.000000f,0.046325f},{0.000367f,1.000000f,0.061766f},{0.000000f,1.000000f,0.084561f},{0.000000f,1.000000f,0.107722f},{0.000000f,1.000000f,0.130884f},{0.000000f,1.000000f,0.154046f},{0.000000f,1.000000f,0.177207f},{0.000000f,1.000000f,0.200369f},{0.000000f,1.000000f,0.223531f},{0.000000f,1.000000f,0.246692f},{0.000000f,1.000000f,0.269854f},{0.000000f,1.000000f,0.293016f},{0.000000f,1.000000f,0.316177f},{0.000000f,1.000000f,0.339339f},{0.000000f,1.000000f,0.362500f},{0.000000f,1.000000f,0.385662f},{0.000000f,1.000000f,0.408824f},{0.000000f,1.000000f,0.431985f},{0.000000f,1.000000f,0.455147f},{0.000000f,1.000000f,0.478309f},{0.000000f,1.000000f,0.501470f},{0.000000f,1.000000f,0.524632f},{0.000000f,1.000000f,0.547794f},{0.000000f,1.000000f,0.570955f},{0.000000f,1.000000f,0.594117f},{0.000000f,1.000000f,0.617279f},{0.000000f,1.000000f,0.640440f},{0.000000f,1.000000f,0.663602f},{0.000000f,1.000000f,0.686763f},{0.000000f,1.000000f,0.709925f},{0.000000f,1.000000f,0.733087f},{0.000000f,1.000000f,0.756248f},{0.000000f,1.000000f,0.779410f},{0.000000f,1.000000f,0.802572f},{0.000000f,1.000000f,0.825733f},{0.000000f,1.000000f,0.848895f},{0.000000f,1.000000f,0.872057f},{0.000000f,1.000000f,0.895218f},{0.000000f,1.000000f,0.918380f},{0.000000f,1.000000f,0.941542f},{0.000000f,1.000000f,0.964703f},{0.000000f,1.000000f,0.987865f},{0.000000f,0.988973f,1.000000f},{0.000000f,0.965812f,1.000000f},{0.000000f,0.942650f,1.000000f},{0.000000f,0.919488f,1.000000f},{0.000000f,0.896326f,1.000000f},{0.000000f,0.873165f,1.000000f},{0.000000f,0.850003f,1.000000f},{0.000000f,0.826841f,1.000000f},{0.000000f,0.803679f,1.000000f},{0.000000f,0.780517f,1.000000f},{0.000000f,0.757356f,1.000000f},{0.000000f,0.734194f,1.000000f},{0.000000f,0.711032f,1.000000f},{0.000000f,0.687870f,1.000000f},{0.000000f,0.664708f,1.000000f},{0.000000f,0.641547f,1.000000f},{0.000000f,0.618385f,1.000000f},{0.000000f,0.595223f,1.000000f},{0.000000f,0.572061f,1.000000f},{0.000000f,0.548900f,1.000000f},{0.000000f,0.525738f,1.000000f},{0.000000f,0.502576f,1.000000f},{0.000000f,0.479414f,1.000000f},{0.000000f,0.456252f,1.000000f},{0.000000f,0.433091f,1.000000f},{0.000000f,0.409929f,1.000000f},{0.000000f,0.386767f,1.000000f},{0.000000f,0.363605f,1.000000f},{0.000000f,0.340443f,1.000000f},{0.000000f,0.317282f,1.000000f},{0.000000f,0.294120f,1.000000f},{0.000000f,0.270958f,1.000000f},{0.000000f,0.247796f,1.000000f},{0.000000f,0.224634f,1.000000f},{0.000000f,0.201473f,1.000000f},{0.000000f,0.178311f,1.000000f},{0.000000f,0.155149f,1.000000f},{0.000000f,0.131987f,1.000000f},{0.000000f,0.108826f,1.000000f},{0.000000f,0.085664f,1.000000f},{0.000000f,0.062502f,1.000000f},{0.007720f,0.047060f,1.000000f},{0.015441f,0.031619f,1.000000f},{0.023161f,0.016178f,1.000000f},{0.030882f,0.000737f,1.000000f},{0.053307f,0.000000f,1.000000f},{0.076469f,0.000000f,1.000000f},{0.099631f,0.000000f,1.000000f},{0.122792f,0.000000f,1.000000f},{0.145954f,0.000000f,1.000000f},{0.169116f,0.000000f,1.000000f},{0.192278f,0.000000f,1.000000f},{0.215439f,0.000000f,1.000000f},{0.238601f,0.000000f,1.000000f},{0.261763f,0.000000f,1.000000f},{0.284925f,0.000000f,1.000000f},{0.308087f,0.000000f,1.000000f},{0.331248f,0.000000f,1.000000f},{0.354410f,0.000000f,1.000000f},{0.377572f,0.000000f,1.000000f},{0.400734f,0.000000f,1.000000f},{0.423896f,0.000000f,1.000000f},{0.447057f,0.000000f,1.000000f},{0.470219f,0.000000f,1.000000f},{0.493381f,0.000000f,1.000000f},{0.516543f,0.000000f,1.000000f},{0.539705f,0.000000f,1.000000f},{0.562866f,0.000000f,1.000000f},{0.586028f,0.000000f,1.000000f},{0.609190f,0.000000f,1.000000f},{0.632352f,0.000000f,1.000000f},{0.655513f,0.000000f,1.000000f},{0.678675f,0.000000f,1.000000f},{0.701837f,0.000000f,1.000000f},{0.724999f,0.000000f,1.000000f},{0.748161f,0.000000f,1.000000f},{0.771322f,0.000000f,1.000000f},{0.794484f,0.000000f,1.000000f},{0.817646f,0.000000f,1.000000f},{0.840808f,0.000000f,1.000000f},{0.863970f,0.000000f,1.000000f},{0.887131f,0.000000f,1.000000f},{0.910293f,0.000000f,1.000000f},{0.933455f,0.000000f,1.000000f},{0.956617f,0.000000f,1.000000f},{0.972426f,0.000000f,0.992648f},{0.980147f,0.000000f,0.977206f},{0.987867f,0.000000f,0.961765f},{0.995588f,0.000000f,0.946324f},{1.000000f,0.000000f,0.927574f},{1.000000f,0.000000f,0.904413f},{1.000000f,0.000000f,0.881251f},{1.000000f,0.000000f,0.858089f},{1.000000f,0.000000f,0.834927f},{1.000000f,0.000000f,0.811765f},{1.000000f,0.000000f,0.788604f},{1.000000f,0.000000f,0.765442f},{1.000000f,0.000000f,0.742280f},{1.000000f,0.000000f,0.719118f},{1.000000f,0.000000f,0.695956f},{1.000000f,0.000000f,0.672795f},{1.000000f,0.000000f,0.649633f},{1.000000f,0.000000f,0.626471f},{1.000000f,0.000000f,0.603309f},{1.000000f,0.000000f,0.580148f},{1.000000f,0.000000f,0.556986f},{1.000000f,0.000000f,0.533824f},{1.000000f,0.000000f,0.510662f},{1.000000f,0.000000f,0.487500f},{1.000000f,0.000000f,0.464339f},{1.000000f,0.000000f,0.441177f},{1.000000f,0.000000f,0.418015f},{1.000000f,0.000000f,0.394853f},{1.000000f,0.000000f,0.371691f},{1.000000f,0.000000f,0.348530f},{1.000000f,0.000000f,0.325368f},{1.000000f,0.000000f,0.302206f},{1.000000f,0.000000f,0.279044f},{1.000000f,0.000000f,0.255883f},{1.000000f,0.000000f,0.232721f},{1.000000f,0.000000f,0.209559f},{1.000000f,0.000000f,0.186397f},{1.000000f,0.000000f,0.163235f},{1.000000f,0.000000f,0.140074f},{1.000000f,0.000000f,0.116912f},{1.000000f,0.000000f,0.093750f}}}},
  {"copper", {{{0.000000f,0.000000f,0.000000f},{0.004844f,0.003064f,0.001951f},{0.009689f,0.006127f,0.003902f},{0.014533f,0.009191f,0.005853f},{0.019377f,0.012254f,0.007804f},{0.024221f,0.015318f,0.009755f},{0.029066f,0.018381f,0.011706f},{0.033910f,0.021445f,0.013657f},{0.038754f,0.024508f,0.015608f},{0.043599f,0.027572f,0.017559f},{0.048443f,0.030635f,0.019510f},{0.053287f,0.033699f,0.021461f},{0.058131f,0.036762f,0.023412f},{0.062976f,0.039826f,0.025363f},{0.067820f,0.042889f,0.027314f},{0.072664f,0.045953f,0.029265f},{0.077509f,0.049016f,0.031216f},{0.082353f,0.052080f,0.033167f},{0.087197f,0.055144f,0.035118f},{0.092042f,0.058207f,0.037069f},{0.096886f,0.061271f,0.039020f},{0.101730f,0.064334f,0.040971f},{0.106574f,0.067398f,0.042922f},{0.111419f,0.070461f,0.044873f},{0.116263f,0.073525f,0.046824f},{0.121107f,0.076588f,0.048775f},{0.125952f,0.079652f,0.050725f},{0.130796f,0.082715f,0.052676f},{0.135640f,0.085779f,0.054627f},{0.140484f,0.088842f,0.056578f},{0.145329f,0.091906f,0.058529f},{0.150173f,0.094969f,0.060480f},{0.155017f,0.098033f,0.062431f},{0.159862f,0.101096f,0.064382f},{0.164706f,0.104160f,0.066333f},{0.169550f,0.107224f,0.068284f},{0.174394f,0.110287f,0.070235f},{0.179239f,0.113351f,0.072186f},{0.184083f,0.116414f,0.074137f},{0.188927f,0.119478f,0.076088f},{0.193772f,0.122541f,0.078039f},{0.198616f,0.125605f,0.079990f},{0.203460f,0.128668f,0.081941f},{0.208304f,0.131732f,0.083892f},{0.213149f,0.134795f,0.085843f},{0.217993f,0.137859f,0.087794f},{0.222837f,0.140922f,0.089745f},{0.227682f,0.143986f,0.091696f},{0.232526f,0.147049f,0.093647f},{0.237370f,0.150113f,0.095598f},{0.242214f,0.153176f,0.097549f},{0.247059f,0.156240f,0.099500f},{0.251903f,0.159304f,0.101451f},{0.256747f,0.162367f,0.103402f},{0.261592f,0.165431f,0.105353f},{0.266436f,0.168494f,0.107304f},{0.271280f,0.171558f,0.109255f},{0.276125f,0.174621f,0.111206f},{0.280969f,0.177685f,0.113157f},{0.285813f,0.180748f,0.115108f},{0.290657f,0.183812f,0.117059f},{0.295502f,0.186875f,0.119010f},{0.300346f,0.189939f,0.120961f},{0.305190f,0.193002f,0.122912f},{0.310035f,0.196066f,0.124863f},{0.314879f,0.199129f,0.126814f},{0.319723f,0.202193f,0.128765f},{0.324567f,0.205256f,0.130716f},{0.329412f,0.208320f,0.132667f},{0.334256f,0.211384f,0.134618f},{0.339100f,0.214447f,0.136569f},{0.343945f,0.217511f,0.138520f},{0.348789f,0.220574f,0.140471f},{0.353633f,0.223638f,0.142422f},{0.358477f,0.226701f,0.144373f},{0.363322f,0.229765f,0.146324f},{0.368166f,0.232828f,0.148275f},{0.373010f,0.235892f,0.150225f},{0.377855f,0.238955f,0.152176f},{0.382699f,0.242019f,0.154127f},{0.387543f,0.245082f,0.156078f},{0.392387f,0.248146f,0.158029f},{0.397232f,0.251209f,0.159980f},{0.402076f,0.254273f,0.161931f},{0.406920f,0.257336f,0.163882f},{0.411765f,0.260400f,0.165833f},{0.416609f,0.263464f,0.167784f},{0.421453f,0.266527f,0.169735f},{0.426297f,0.269591f,0.171686f},{0.431142f,0.272654f,0.173637f},{0.435986f,0.275718f,0.175588f},{0.440830f,0.278781f,0.177539f},{0.445675f,0.281845f,0.179490f},{0.450519f,0.284908f,0.181441f},{0.455363f,0.287972f,0.183392f},{0.460208f,0.291035f,0.185343f},{0.465052f,0.294099f,0.187294f},{0.469896f,0.297162f,0.189245f},{0.474740f,0.300226f,0.191196f},{0.479585f,0.303289f,0.193147f},{0.484429f,0.306353f,0.195098f},{0.489273f,0.309416f,0.197049f},{0.494118f,0.312480f,0.199000f},{0.498962f,0.315544f,0.200951f},{0.503806f,0.318607f,0.202902f},{0.508650f,0.321671f,0.204853f},{0.513495f,0.324734f,0.206804f},{0.518339f,0.327798f,0.208755f},{0.523183f,0.330861f,0.210706f},{0.528028f,0.333925f,0.212657f},{0.532872f,0.336988f,0.214608f},{0.537716f,0.340052f,0.216559f},{0.542560f,0.343115f,0.218510f},{0.547405f,0.346179f,0.220461f},{0.552249f,0.349242f,0.222412f},{0.557093f,0.352306f,0.224363f},{0.561938f,0.355369f,0.226314f},{0.566782f,0.358433f,0.228265f},{0.571626f,0.361496f,0.230216f},{0.576470f,0.364560f,0.232167f},{0.581315f,0.367624f,0.234118f},{0.586159f,0.370687f,0.236069f},{0.591003f,0.373751f,0.238020f},{0.595848f,0.376814f,0.239971f},{0.600692f,0.379878f,0.241922f},{0.605536f,0.382941f,0.243873f},{0.610380f,0.386005f,0.245824f},{0.615225f,0.389068f,0.247775f},{0.620069f,0.392132f,0.249725f},{0.624913f,0.395195f,0.251676f},{0.629758f,0.398259f,0.253627f},{0.634602f,0.401322f,0.255578f},{0.639446f,0.404386f,0.257529f},{0.644291f,0.407449f,0.259480f},{0.649135f,0.410513f,0.261431f},{0.653979f,0.413576f,0.263382f},{0.658823f,0.416640f,0.265333f},{0.663668f,0.419704f,0.267284f},{0.668512f,0.422767f,0.269235f},{0.673356f,0.425831f,0.271186f},{0.678201f,0.428894f,0.273137f},{0.683045f,0.431958f,0.275088f},{0.687889f,0.435021f,0.277039f},{0.692733f,0.438085f,0.278990f},{0.697578f,0.441148f,0.280941f},{0.702422f,0.444212f,0.282892f},{0.707266f,0.447275f,0.284843f},{0.712111f,0.450339f,0.286794f},{0.716955f,0.453402f,0.288745f},{0.721799f,0.456466f,0.290696f},{0.726643f,0.459529f,0.292647f},{0.731488f,0.462593f,0.294598f},{0.736332f,0.465656f,0.296549f},{0.741176f,0.468720f,0.298500f},{0.746021f,0.471784f,0.300451f},{0.750865f,0.474847f,0.302402f},{0.755709f,0.477911f,0.304353f},{0.760553f,0.480974f,0.306304f},{0.765398f,0.484038f,0.308255f},{0.770242f,0.487101f,0.310206f},{0.775086f,0.490165f,0.312157f},{0.779931f,0.493228f,0.314108f},{0.784775f,0.496292f,0.316059f},{0.789619f,0.499355f,0.318010f},{0.794463f,0.502419f,0.319961f},{0.799308f,0.505482f,0.321912f},{0.804152f,0.508546f,0.323863f},{0.808996f,0.511609f,0.325814f},{0.813841f,0.514673f,0.327765f},{0.818685f,0.517736f,0.329716f},{0.823529f,0.520800f,0.331667f},{0.828374f,0.523864f,0.333618f},{0.833218f,0.526927f,0.335569f},{0.838062f,0.529991f,0.337520f},{0.842906f,0.533054f,0.339471f},{0.847751f,0.536118f,0.341422f},{0.852595f,0.539181f,0.343373f},{0.857439f,0.542245f,0.345324f},{0.862284f,0.545308f,0.347275f},{0.867128f,0.548372f,0.349225f},{0.871972f,0.551435f,0.351176f},{0.876816f,0.554499f,0.353127f},{0.881661f,0.557562f,0.355078f},{0.886505f,0.560626f,0.357029f},{0.891349f,0.563689f,0.358980f},{0.896194f,0.566753f,0.360931f},{0.901038f,0.569816f,0.362882f},{0.905882f,0.572880f,0.364833f},{0.910726f,0.575944f,0.366784f},{0.915571f,0.579007f,0.368735f},{0.920415f,0.582071f,0.370686f},{0.925259f,0.585134f,0.372637f},{0.930104f,0.588198f,0.374588f},{0.934948f,0.591261f,0.376539f},{0.939792f,0.594325f,0.378490f},{0.944636f,0.597388f,0.380441f},{0.949481f,0.600452f,0.382392f},{0.954325f,0.603515f,0.384343f},{0.959169f,0.606579f,0.386294f},{0.964014f,0.609642f,0.388245f},{0.968858f,0.612706f,0.390196f},{0.973702f,0.615769f,0.392147f},{0.978546f,0.618833f,0.394098f},{0.983391f,0.621896f,0.396049f},{0.988235f,0.624960f,0.398000f},{0.993079f,0.628024f,0.399951f},{0.997924f,0.631087f,0.401902f},{1.000000f,0.634151f,0.403853f},{1.000000f,0.637214f,0.405804f},{1.000000f,0.640278f,0.407755f},{1.000000f,0.643341f,0.409706f},{1.000000f,0.646405f,0.411657f},{1.000000f,0.649468f,0.413608f},{1.000000f,0.652532f,0.415559f},{1.000000f,0.655595f,0.417510f},{1.000000f,0.658659f,0.419461f},{1.000000f,0.661722f,0.421412f},{1.000000f,0.664786f,0.423363f},{1.000000f,0.667849f,0.425314f},{1.000000f,0.670913f,0.427265f},{1.000000f,0.673976f,0.429216f},{1.000000f,0.677040f,0.431167f},{1.000000f,0.680104f,0.433118f},{1.000000f,0.683167f,0.435069f},{1.000000f,0.686231f,0.437020f},{1.000000f,0.689294f,0.438971f},{1.000000f,0.692358f,0.440922f},{1.000000f,0.695421f,0.442873f},{1.000000f,0.698485f,0.444824f},{1.000000f,0.701548f,0.446775f},{1.000000f,0.704612f,0.448725f},{1.000000f,0.707675f,0.450676f},{1.000000f,0.710739f,0.452627f},{1.000000f,0.713802f,0.454578f},{1.000000f,0.716866f,0.456529f},{1.000000f,0.719929f,0.458480f},{1.000000f,0.722993f,0.460431f},{1.000000f,0.726056f,0.462382f},{1.000000f,0.729120f,0.464333f},{1.000000f,0.732184f,0.466284f},{1.000000f,0.735247f,0.468235f},{1.000000f,0.738311f,0.470186f},{1.000000f,0.741374f,0.472137f},{1.000000f,0.744438f,0.474088f},{1.000000f,0.747501f,0.476039f},{1.000000f,0.750565f,0.477990f},{1.000000f,0.753628f,0.479941f},{1.000000f,0.756692f,0.481892f},{1.000000f,0.759755f,0.483843f},{1.000000f,0.762819f,0.485794f},{1.000000f,0.765882f,0.487745f},{1.000000f,0.768946f,0.489696f},{1.000000f,0.772009f,0.491647f},{1.000000f,0.775073f,0.493598f},{1.000000f,0.778136f,0.495549f},{1.000000f,0.781200f,0.497500f}}}},
  {"magma", {{{0.001462f,0.000466f,0.013866f},{0.002258f,0.001295f,0.018331f},{0.003279f,0.002305f,0.023708f},{0.004512f,0.003490f,0.029965f},{0.005950f,0.004843f,0.037130f},{0.007588f,0.006356f,0.044973f},{0.009426f,0.008022f,0.052844f},{0.011465f,0.009828f,0.060750f},{0.013708f,0.011771f,0.068667f},{0.016156f,0.013840f,0.076603f},{0.018815f,0.016026f,0.084584f},{0.021692f,0.018320f,0.092610f},{0.024792f,0.020715f,0.100676f},{0.028123f,0.023201f,0.108787f},{0.031696f,0.025765f,0.116965f},{0.035520f,0.028397f,0.125209f},{0.039608f,0.031090f,0.133515f},{0.043830f,0.033830f,0.141886f},{0.048062f,0.036607f,0.150327f},{0.052320f,0.039407f,0.158841f},{0.056615f,0.042160f,0.167446f},{0.060949f,0.044794f,0.176129f},{0.065330f,0.047318f,0.184892f},{0.069764f,0.049726f,0.193735f},{0.074257f,0.052017f,0.202660f},{0.078815f,0.054184f,0.211667f},{0.083446f,0.056225f,0.220755f},{0.088155f,0.058133f,0.229922f},{0.092949f,0.059904f,0.239164f},{0.097833f,0.061531f,0.248477f},{0.102815f,0.063010f,0.257854f},{0.107899f,0.064335f,0.267289f},{0.113094f,0.065492f,0.276784f},{0.118405f,0.066479f,0.286321f},{0.123833f,0.067295f,0.295879f},{0.129380f,0.067935f,0.305443f},{0.135053f,0.068391f,0.315000f},{0.140858f,0.068654f,0.324538f},{0.146785f,0.068738f,0.334011f},{0.152839f,0.068637f,0.343404f},{0.159018f,0.068354f,0.352688f},{0.165308f,0.067911f,0.361816f},{0.171713f,0.067305f,0.370771f},{0.178212f,0.066576f,0.379497f},{0.184801f,0.065732f,0.387973f},{0.191460f,0.064818f,0.396152f},{0.198177f,0.063862f,0.404009f},{0.204935f,0.062907f,0.411514f},{0.211718f,0.061992f,0.418647f},{0.218512f,0.061158f,0.425392f},{0.225302f,0.060445f,0.431742f},{0.232077f,0.059889f,0.437695f},{0.238826f,0.059517f,0.443256f},{0.245543f,0.059352f,0.448436f},{0.252220f,0.059415f,0.453248f},{0.258857f,0.059706f,0.457710f},{0.265447f,0.060237f,0.461840f},{0.271994f,0.060994f,0.465660f},{0.278493f,0.061978f,0.469190f},{0.284951f,0.063168f,0.472451f},{0.291366f,0.064553f,0.475462f},{0.297740f,0.066117f,0.478243f},{0.304081f,0.067835f,0.480812f},{0.310382f,0.069702f,0.483186f},{0.316654f,0.071690f,0.485380f},{0.322899f,0.073782f,0.487408f},{0.329114f,0.075972f,0.489287f},{0.335308f,0.078236f,0.491024f},{0.341482f,0.080564f,0.492631f},{0.347636f,0.082946f,0.494121f},{0.353773f,0.085373f,0.495501f},{0.359898f,0.087831f,0.496778f},{0.366012f,0.090314f,0.497960f},{0.372116f,0.092816f,0.499053f},{0.378211f,0.095332f,0.500067f},{0.384299f,0.097855f,0.501002f},{0.390384f,0.100379f,0.501864f},{0.396467f,0.102902f,0.502658f},{0.402548f,0.105420f,0.503386f},{0.408629f,0.107930f,0.504052f},{0.414709f,0.110431f,0.504662f},{0.420791f,0.112920f,0.505215f},{0.426877f,0.115395f,0.505714f},{0.432967f,0.117855f,0.506160f},{0.439062f,0.120298f,0.506555f},{0.445163f,0.122724f,0.506901f},{0.451271f,0.125132f,0.507198f},{0.457386f,0.127522f,0.507448f},{0.463508f,0.129893f,0.507652f},{0.469640f,0.132245f,0.507809f},{0.475780f,0.134577f,0.507921f},{0.481929f,0.136891f,0.507989f},{0.488088f,0.139186f,0.508011f},{0.494258f,0.141462f,0.507988f},{0.500438f,0.143719f,0.507920f},{0.506629f,0.145958f,0.507806f},{0.512831f,0.148179f,0.507648f},{0.519045f,0.150383f,0.507443f},{0.525270f,0.152569f,0.507192f},{0.531507f,0.154739f,0.506895f},{0.537755f,0.156894f,0.506551f},{0.544015f,0.159033f,0.506159f},{0.550287f,0.161158f,0.505719f},{0.556571f,0.163269f,0.505230f},{0.562866f,0.165368f,0.504692f},{0.569172f,0.167454f,0.504105f},{0.575490f,0.169530f,0.503466f},{0.581819f,0.171596f,0.502777f},{0.588158f,0.173652f,0.502035f},{0.594508f,0.175701f,0.501241f},{0.600868f,0.177743f,0.500394f},{0.607238f,0.179779f,0.499492f},{0.613617f,0.181811f,0.498536f},{0.620005f,0.183840f,0.497524f},{0.626401f,0.185867f,0.496456f},{0.632805f,0.187893f,0.495332f},{0.639216f,0.189921f,0.494150f},{0.645633f,0.191952f,0.492910f},{0.652056f,0.193986f,0.491611f},{0.658483f,0.196027f,0.490253f},{0.664915f,0.198075f,0.488836f},{0.671349f,0.200133f,0.487358f},{0.677786f,0.202203f,0.485819f},{0.684224f,0.204286f,0.484219f},{0.690661f,0.206384f,0.482558f},{0.697098f,0.208501f,0.480835f},{0.703532f,0.210638f,0.479049f},{0.709962f,0.212797f,0.477201f},{0.716387f,0.214982f,0.475290f},{0.722805f,0.217194f,0.473316f},{0.729216f,0.219437f,0.471279f},{0.735616f,0.221713f,0.469180f},{0.742004f,0.224025f,0.467018f},{0.748378f,0.226377f,0.464794f},{0.754737f,0.228772f,0.462509f},{0.761077f,0.231214f,0.460162f},{0.767398f,0.233705f,0.457755f},{0.773695f,0.236249f,0.455289f},{0.779968f,0.238851f,0.452765f},{0.786212f,0.241514f,0.450184f},{0.792427f,0.244242f,0.447543f},{0.798608f,0.247040f,0.444848f},{0.804752f,0.249911f,0.442102f},{0.810855f,0.252861f,0.439305f},{0.816914f,0.255895f,0.436461f},{0.822926f,0.259016f,0.433573f},{0.828886f,0.262229f,0.430644f},{0.834791f,0.265540f,0.427671f},{0.840636f,0.268953f,0.424666f},{0.846416f,0.272473f,0.421631f},{0.852126f,0.276106f,0.418573f},{0.857763f,0.279857f,0.415496f},{0.863320f,0.283729f,0.412403f},{0.868793f,0.287728f,0.409303f},{0.874176f,0.291859f,0.406205f},{0.879464f,0.296125f,0.403118f},{0.884651f,0.300530f,0.400047f},{0.889731f,0.305079f,0.397002f},{0.894700f,0.309773f,0.393995f},{0.899552f,0.314616f,0.391037f},{0.904281f,0.319610f,0.388137f},{0.908884f,0.324755f,0.385308f},{0.913354f,0.330052f,0.382563f},{0.917689f,0.335500f,0.379915f},{0.921884f,0.341098f,0.377376f},{0.925937f,0.346844f,0.374959f},{0.929845f,0.352734f,0.372677f},{0.933606f,0.358764f,0.370541f},{0.937221f,0.364929f,0.368567f},{0.940687f,0.371224f,0.366762f},{0.944006f,0.377643f,0.365136f},{0.947180f,0.384178f,0.363701f},{0.950210f,0.390820f,0.362468f},{0.953099f,0.397563f,0.361438f},{0.955849f,0.404400f,0.360619f},{0.958464f,0.411324f,0.360014f},{0.960949f,0.418323f,0.359630f},{0.963310f,0.425390f,0.359469f},{0.965549f,0.432519f,0.359529f},{0.967671f,0.439703f,0.359810f},{0.969680f,0.446936f,0.360311f},{0.971582f,0.454210f,0.361030f},{0.973381f,0.461520f,0.361965f},{0.975082f,0.468861f,0.363111f},{0.976690f,0.476226f,0.364466f},{0.978210f,0.483612f,0.366025f},{0.979645f,0.491014f,0.367783f},{0.981000f,0.498428f,0.369734f},{0.982279f,0.505851f,0.371874f},{0.983485f,0.513280f,0.374198f},{0.984622f,0.520713f,0.376698f},{0.985693f,0.528148f,0.379371f},{0.986700f,0.535582f,0.382210f},{0.987646f,0.543015f,0.385210f},{0.988533f,0.550446f,0.388365f},{0.989363f,0.557873f,0.391671f},{0.990138f,0.565296f,0.395122f},{0.990871f,0.572706f,0.398714f},{0.991558f,0.580107f,0.402441f},{0.992196f,0.587502f,0.406299f},{0.992785f,0.594891f,0.410283f},{0.993326f,0.602275f,0.414390f},{0.993834f,0.609644f,0.418613f},{0.994309f,0.616999f,0.422950f},{0.994738f,0.624350f,0.427397f},{0.995122f,0.631696f,0.431951f},{0.995480f,0.639027f,0.436607f},{0.995810f,0.646344f,0.441361f},{0.996096f,0.653659f,0.446213f},{0.996341f,0.660969f,0.451160f},{0.996580f,0.668256f,0.456192f},{0.996775f,0.675541f,0.461314f},{0.996925f,0.682828f,0.466526f},{0.997077f,0.690088f,0.471811f},{0.997186f,0.697349f,0.477182f},{0.997254f,0.704611f,0.482635f},{0.997325f,0.711848f,0.488154f},{0.997351f,0.719089f,0.493755f},{0.997351f,0.726324f,0.499428f},{0.997341f,0.733545f,0.505167f},{0.997285f,0.740772f,0.510983f},{0.997228f,0.747981f,0.516859f},{0.997138f,0.755190f,0.522806f},{0.997019f,0.762398f,0.528821f},{0.996898f,0.769591f,0.534892f},{0.996727f,0.776795f,0.541039f},{0.996571f,0.783977f,0.547233f},{0.996369f,0.791167f,0.553499f},{0.996162f,0.798348f,0.559820f},{0.995932f,0.805527f,0.566202f},{0.995680f,0.812706f,0.572645f},{0.995424f,0.819875f,0.579140f},{0.995131f,0.827052f,0.585701f},{0.994851f,0.834213f,0.592307f},{0.994524f,0.841387f,0.598983f},{0.994222f,0.848540f,0.605696f},{0.993866f,0.855711f,0.612482f},{0.993545f,0.862859f,0.619299f},{0.993170f,0.870024f,0.626189f},{0.992831f,0.877168f,0.633109f},{0.992440f,0.884330f,0.640099f},{0.992089f,0.891470f,0.647116f},{0.991688f,0.898627f,0.654202f},{0.991332f,0.905763f,0.661309f},{0.990930f,0.912915f,0.668481f},{0.990570f,0.920049f,0.675675f},{0.990175f,0.927196f,0.682926f},{0.989815f,0.934329f,0.690198f},{0.989434f,0.941470f,0.697519f},{0.989077f,0.948604f,0.704863f},{0.988717f,0.955742f,0.712242f},{0.988367f,0.962878f,0.719649f},{0.988033f,0.970012f,0.727077f},{0.987691f,0.977154f,0.734536f},{0.987387f,0.984288f,0.742002f},{0.987053f,0.991438f,0.749504f}}}},
  {"inferno", {{{0.001462f,0.000466f,0.013866f},{0.002267f,0.001270f,0.018570f},{0.003299f,0.002249f,0.024239f},{0.004547f,0.003392f,0.030909f},{0.006006f,0.004692f,0.038558f},{0.007676f,0.006136f,0.046836f},{0.009561f,0.007713f,0.055143f},{0.011663f,0.009417f,0.063460f},{0.013995f,0.011225f,0.071862f},{0.016561f,0.013136f,0.080282f},{0.019373f,0.015133f,0.088767f},{0.022447f,0.017199f,0.097327f},{0.025793f,0.019331f,0.105930f},{0.029432f,0.021503f,0.114621f},{0.033385f,0.023702f,0.123397f},{0.037668f,0.025921f,0.132232f},{0.042253f,0.028139f,0.141141f},{0.046915f,0.030324f,0.150164f},{0.051644f,0.032474f,0.159254f},{0.056449f,0.034569f,0.168414f},{0.061340f,0.036590f,0.177642f},{0.066331f,0.038504f,0.186962f},{0.071429f,0.040294f,0.196354f},{0.076637f,0.041905f,0.205799f},{0.081962f,0.043328f,0.215289f},{0.087411f,0.044556f,0.224813f},{0.092990f,0.045583f,0.234358f},{0.098702f,0.046402f,0.243904f},{0.104551f,0.047008f,0.253430f},{0.110536f,0.047399f,0.262912f},{0.116656f,0.047574f,0.272321f},{0.122908f,0.047536f,0.281624f},{0.129285f,0.047293f,0.290788f},{0.135778f,0.046856f,0.299776f},{0.142378f,0.046242f,0.308553f},{0.149073f,0.045468f,0.317085f},{0.155850f,0.044559f,0.325338f},{0.162689f,0.043554f,0.333277f},{0.169575f,0.042489f,0.340874f},{0.176493f,0.041402f,0.348111f},{0.183429f,0.040329f,0.354971f},{0.190367f,0.039309f,0.361447f},{0.197297f,0.038400f,0.367535f},{0.204209f,0.037632f,0.373238f},{0.211095f,0.037030f,0.378563f},{0.217949f,0.036615f,0.383522f},{0.224763f,0.036405f,0.388129f},{0.231538f,0.036405f,0.392400f},{0.238273f,0.036621f,0.396353f},{0.244967f,0.037055f,0.400007f},{0.251620f,0.037705f,0.403378f},{0.258234f,0.038571f,0.406485f},{0.264810f,0.039647f,0.409345f},{0.271347f,0.040922f,0.411976f},{0.277850f,0.042353f,0.414392f},{0.284321f,0.043933f,0.416608f},{0.290763f,0.045644f,0.418637f},{0.297178f,0.047470f,0.420491f},{0.303568f,0.049396f,0.422182f},{0.309935f,0.051407f,0.423721f},{0.316282f,0.053490f,0.425116f},{0.322610f,0.055634f,0.426377f},{0.328921f,0.057827f,0.427511f},{0.335217f,0.060060f,0.428524f},{0.341500f,0.062325f,0.429425f},{0.347771f,0.064616f,0.430217f},{0.354032f,0.066925f,0.430906f},{0.360284f,0.069247f,0.431497f},{0.366529f,0.071579f,0.431994f},{0.372768f,0.073915f,0.432400f},{0.379001f,0.076253f,0.432719f},{0.385228f,0.078591f,0.432955f},{0.391453f,0.080927f,0.433109f},{0.397674f,0.083257f,0.433183f},{0.403894f,0.085580f,0.433179f},{0.410113f,0.087896f,0.433098f},{0.416331f,0.090203f,0.432943f},{0.422549f,0.092501f,0.432714f},{0.428768f,0.094790f,0.432412f},{0.434987f,0.097069f,0.432039f},{0.441207f,0.099338f,0.431594f},{0.447428f,0.101597f,0.431080f},{0.453651f,0.103848f,0.430498f},{0.459875f,0.106089f,0.429846f},{0.466100f,0.108322f,0.429125f},{0.472328f,0.110547f,0.428334f},{0.478558f,0.112764f,0.427475f},{0.484789f,0.114974f,0.426548f},{0.491022f,0.117179f,0.425552f},{0.497257f,0.119379f,0.424488f},{0.503493f,0.121575f,0.423356f},{0.509730f,0.123769f,0.422156f},{0.515967f,0.125960f,0.420887f},{0.522206f,0.128150f,0.419549f},{0.528444f,0.130341f,0.418142f},{0.534683f,0.132534f,0.416667f},{0.540920f,0.134729f,0.415123f},{0.547157f,0.136929f,0.413511f},{0.553392f,0.139134f,0.411829f},{0.559624f,0.141346f,0.410078f},{0.565854f,0.143567f,0.408258f},{0.572081f,0.145797f,0.406369f},{0.578304f,0.148039f,0.404411f},{0.584521f,0.150294f,0.402385f},{0.590734f,0.152563f,0.400290f},{0.596940f,0.154848f,0.398125f},{0.603139f,0.157151f,0.395891f},{0.609330f,0.159474f,0.393589f},{0.615513f,0.161817f,0.391219f},{0.621685f,0.164184f,0.388781f},{0.627847f,0.166575f,0.386276f},{0.633998f,0.168992f,0.383704f},{0.640135f,0.171438f,0.381065f},{0.646260f,0.173914f,0.378359f},{0.652369f,0.176421f,0.375586f},{0.658463f,0.178962f,0.372748f},{0.664540f,0.181539f,0.369846f},{0.670599f,0.184153f,0.366879f},{0.676638f,0.186807f,0.363849f},{0.682656f,0.189501f,0.360757f},{0.688653f,0.192239f,0.357603f},{0.694627f,0.195021f,0.354388f},{0.700576f,0.197851f,0.351113f},{0.706500f,0.200728f,0.347777f},{0.712396f,0.203656f,0.344383f},{0.718264f,0.206636f,0.340931f},{0.724103f,0.209670f,0.337424f},{0.729909f,0.212759f,0.333861f},{0.735683f,0.215906f,0.330245f},{0.741423f,0.219112f,0.326576f},{0.747127f,0.222378f,0.322856f},{0.752794f,0.225706f,0.319085f},{0.758422f,0.229097f,0.315266f},{0.764010f,0.232554f,0.311399f},{0.769556f,0.236077f,0.307485f},{0.775059f,0.239667f,0.303526f},{0.780517f,0.243327f,0.299523f},{0.785929f,0.247056f,0.295477f},{0.791293f,0.250856f,0.291390f},{0.796607f,0.254728f,0.287264f},{0.801871f,0.258674f,0.283099f},{0.807082f,0.262692f,0.278898f},{0.812239f,0.266786f,0.274661f},{0.817341f,0.270954f,0.270390f},{0.822386f,0.275197f,0.266085f},{0.827372f,0.279517f,0.261750f},{0.832299f,0.283913f,0.257383f},{0.837165f,0.288385f,0.252988f},{0.841969f,0.292933f,0.248564f},{0.846709f,0.297559f,0.244113f},{0.851384f,0.302260f,0.239636f},{0.855992f,0.307038f,0.235133f},{0.860533f,0.311892f,0.230606f},{0.865006f,0.316822f,0.226055f},{0.869409f,0.321827f,0.221482f},{0.873741f,0.326906f,0.216886f},{0.878001f,0.332060f,0.212268f},{0.882188f,0.337287f,0.207628f},{0.886302f,0.342586f,0.202968f},{0.890341f,0.347957f,0.198286f},{0.894305f,0.353399f,0.193584f},{0.898192f,0.358911f,0.188860f},{0.902003f,0.364492f,0.184116f},{0.905735f,0.370140f,0.179350f},{0.909390f,0.375856f,0.174563f},{0.912966f,0.381636f,0.169755f},{0.916462f,0.387481f,0.164924f},{0.919879f,0.393389f,0.160070f},{0.923215f,0.399359f,0.155193f},{0.926470f,0.405389f,0.150292f},{0.929644f,0.411479f,0.145367f},{0.932737f,0.417627f,0.140417f},{0.935747f,0.423831f,0.135440f},{0.938675f,0.430091f,0.130438f},{0.941521f,0.436405f,0.125409f},{0.944285f,0.442772f,0.120354f},{0.946965f,0.449191f,0.115272f},{0.949562f,0.455660f,0.110164f},{0.952075f,0.462178f,0.105031f},{0.954506f,0.468744f,0.099874f},{0.956852f,0.475356f,0.094695f},{0.959114f,0.482014f,0.089499f},{0.961293f,0.488716f,0.084289f},{0.963387f,0.495462f,0.079073f},{0.965397f,0.502249f,0.073859f},{0.967322f,0.509078f,0.068659f},{0.969163f,0.515946f,0.063488f},{0.970919f,0.522853f,0.058367f},{0.972590f,0.529798f,0.053324f},{0.974176f,0.536780f,0.048392f},{0.975677f,0.543798f,0.043618f},{0.977092f,0.550850f,0.039050f},{0.978422f,0.557937f,0.034931f},{0.979666f,0.565057f,0.031409f},{0.980824f,0.572209f,0.028508f},{0.981895f,0.579392f,0.026250f},{0.982881f,0.586606f,0.024661f},{0.983779f,0.593849f,0.023770f},{0.984591f,0.601122f,0.023606f},{0.985315f,0.608422f,0.024202f},{0.985952f,0.615750f,0.025592f},{0.986502f,0.623105f,0.027814f},{0.986964f,0.630485f,0.030908f},{0.987337f,0.637890f,0.034916f},{0.987622f,0.645320f,0.039886f},{0.987819f,0.652773f,0.045581f},{0.987926f,0.660250f,0.051750f},{0.987945f,0.667748f,0.058329f},{0.987874f,0.675267f,0.065257f},{0.987714f,0.682807f,0.072489f},{0.987464f,0.690366f,0.079990f},{0.987124f,0.697944f,0.087731f},{0.986694f,0.705540f,0.095694f},{0.986175f,0.713153f,0.103863f},{0.985566f,0.720782f,0.112229f},{0.984865f,0.728427f,0.120785f},{0.984075f,0.736087f,0.129527f},{0.983196f,0.743758f,0.138453f},{0.982228f,0.751442f,0.147565f},{0.981173f,0.759135f,0.156863f},{0.980032f,0.766837f,0.166353f},{0.978806f,0.774545f,0.176037f},{0.977497f,0.782258f,0.185923f},{0.976108f,0.789974f,0.196018f},{0.974638f,0.797692f,0.206332f},{0.973088f,0.805409f,0.216877f},{0.971468f,0.813122f,0.227658f},{0.969783f,0.820825f,0.238686f},{0.968041f,0.828515f,0.249972f},{0.966243f,0.836191f,0.261534f},{0.964394f,0.843848f,0.273391f},{0.962517f,0.851476f,0.285546f},{0.960626f,0.859069f,0.298010f},{0.958720f,0.866624f,0.310820f},{0.956834f,0.874129f,0.323974f},{0.954997f,0.881569f,0.337475f},{0.953215f,0.888942f,0.351369f},{0.951546f,0.896226f,0.365627f},{0.950018f,0.903409f,0.380271f},{0.948683f,0.910473f,0.395289f},{0.947594f,0.917399f,0.410665f},{0.946809f,0.924168f,0.426373f},{0.946392f,0.930761f,0.442367f},{0.946403f,0.937159f,0.458592f},{0.946903f,0.943348f,0.474970f},{0.947937f,0.949318f,0.491426f},{0.949545f,0.955063f,0.507860f},{0.951740f,0.960587f,0.524203f},{0.954529f,0.965896f,0.540361f},{0.957896f,0.971003f,0.556275f},{0.961812f,0.975924f,0.571925f},{0.966249f,0.980678f,0.587206f},{0.971162f,0.985282f,0.602154f},{0.976511f,0.989753f,0.616760f},{0.982257f,0.994109f,0.631017f},{0.988362f,0.998364f,0.644924f}}}},
  {"plasma", {{{0.050383f,0.029803f,0.527975f},{0.063536f,0.028426f,0.533124f},{0.075353f,0.027206f,0.538007f},{0.086222f,0.026125f,0.542658f},{0.096379f,0.025165f,0.547103f},{0.105980f,0.024309f,0.551368f},{0.115124f,0.023556f,0.555468f},{0.123903f,0.022878f,0.559423f},{0.132381f,0.022258f,0.563250f},{0.140603f,0.021687f,0.566959f},{0.148607f,0.021154f,0.570562f},{0.156421f,0.020651f,0.574065f},{0.164070f,0.020171f,0.577478f},{0.171574f,0.019706f,0.580806f},{0.178950f,0.019252f,0.584054f},{0.186213f,0.018803f,0.587228f},{0.193374f,0.018354f,0.590330f},{0.200445f,0.017902f,0.593364f},{0.207435f,0.017442f,0.596333f},{0.214350f,0.016973f,0.599239f},{0.221197f,0.016497f,0.602083f},{0.227983f,0.016007f,0.604867f},{0.234715f,0.015502f,0.607592f},{0.241396f,0.014979f,0.610259f},{0.248032f,0.014439f,0.612868f},{0.254627f,0.013882f,0.615419f},{0.261183f,0.013308f,0.617911f},{0.267703f,0.012716f,0.620346f},{0.274191f,0.012109f,0.622722f},{0.280648f,0.011488f,0.625038f},{0.287076f,0.010855f,0.627295f},{0.293478f,0.010213f,0.629490f},{0.299855f,0.009561f,0.631624f},{0.306210f,0.008902f,0.633694f},{0.312543f,0.008239f,0.635700f},{0.318856f,0.007576f,0.637640f},{0.325150f,0.006915f,0.639512f},{0.331426f,0.006261f,0.641316f},{0.337683f,0.005618f,0.643049f},{0.343925f,0.004991f,0.644710f},{0.350150f,0.004382f,0.646298f},{0.356359f,0.003798f,0.647810f},{0.362553f,0.003243f,0.649245f},{0.368733f,0.002724f,0.650601f},{0.374897f,0.002245f,0.651876f},{0.381047f,0.001814f,0.653068f},{0.387183f,0.001434f,0.654177f},{0.393304f,0.001114f,0.655199f},{0.399411f,0.000859f,0.656133f},{0.405503f,0.000678f,0.656977f},{0.411580f,0.000577f,0.657730f},{0.417642f,0.000564f,0.658390f},{0.423689f,0.000646f,0.658956f},{0.429719f,0.000831f,0.659425f},{0.435734f,0.001127f,0.659797f},{0.441732f,0.001540f,0.660069f},{0.447714f,0.002080f,0.660240f},{0.453677f,0.002755f,0.660310f},{0.459623f,0.003574f,0.660277f},{0.465550f,0.004545f,0.660139f},{0.471457f,0.005678f,0.659897f},{0.477344f,0.006980f,0.659549f},{0.483210f,0.008460f,0.659095f},{0.489055f,0.010127f,0.658534f},{0.494877f,0.011990f,0.657865f},{0.500678f,0.014055f,0.657088f},{0.506454f,0.016333f,0.656202f},{0.512206f,0.018833f,0.655209f},{0.517933f,0.021563f,0.654109f},{0.523633f,0.024532f,0.652901f},{0.529306f,0.027747f,0.651586f},{0.534952f,0.031217f,0.650165f},{0.540570f,0.034950f,0.648640f},{0.546157f,0.038954f,0.647010f},{0.551715f,0.043136f,0.645277f},{0.557243f,0.047331f,0.643443f},{0.562738f,0.051545f,0.641509f},{0.568201f,0.055778f,0.639477f},{0.573632f,0.060028f,0.637349f},{0.579029f,0.064296f,0.635126f},{0.584391f,0.068579f,0.632812f},{0.589719f,0.072878f,0.630408f},{0.595011f,0.077190f,0.627917f},{0.600266f,0.081516f,0.625342f},{0.605485f,0.085854f,0.622686f},{0.610667f,0.090204f,0.619951f},{0.615812f,0.094564f,0.617140f},{0.620919f,0.098934f,0.614257f},{0.625987f,0.103312f,0.611305f},{0.631017f,0.107699f,0.608287f},{0.636008f,0.112092f,0.605205f},{0.640959f,0.116492f,0.602065f},{0.645872f,0.120898f,0.598867f},{0.650746f,0.125309f,0.595617f},{0.655580f,0.129725f,0.592317f},{0.660374f,0.134144f,0.588971f},{0.665129f,0.138566f,0.585582f},{0.669845f,0.142992f,0.582154f},{0.674522f,0.147419f,0.578688f},{0.679160f,0.151848f,0.575189f},{0.683758f,0.156278f,0.571660f},{0.688318f,0.160709f,0.568103f},{0.692840f,0.165141f,0.564522f},{0.697324f,0.169573f,0.560919f},{0.701769f,0.174005f,0.557296f},{0.706178f,0.178437f,0.553657f},{0.710549f,0.182868f,0.550004f},{0.714883f,0.187299f,0.546338f},{0.719181f,0.191729f,0.542663f},{0.723444f,0.196158f,0.538981f},{0.727670f,0.200586f,0.535293f},{0.731862f,0.205013f,0.531601f},{0.736019f,0.209439f,0.527908f},{0.740143f,0.213864f,0.524216f},{0.744232f,0.218288f,0.520524f},{0.748289f,0.222711f,0.516834f},{0.752312f,0.227133f,0.513149f},{0.756304f,0.231555f,0.509468f},{0.760264f,0.235976f,0.505794f},{0.764193f,0.240396f,0.502126f},{0.768090f,0.244817f,0.498465f},{0.771958f,0.249237f,0.494813f},{0.775796f,0.253658f,0.491171f},{0.779604f,0.258078f,0.487539f},{0.783383f,0.262500f,0.483918f},{0.787133f,0.266922f,0.480307f},{0.790855f,0.271345f,0.476706f},{0.794549f,0.275770f,0.473117f},{0.798216f,0.280197f,0.469538f},{0.801855f,0.284626f,0.465971f},{0.805467f,0.289057f,0.462415f},{0.809052f,0.293491f,0.458870f},{0.812612f,0.297928f,0.455338f},{0.816144f,0.302368f,0.451816f},{0.819651f,0.306812f,0.448306f},{0.823132f,0.311261f,0.444806f},{0.826588f,0.315714f,0.441316f},{0.830018f,0.320172f,0.437836f},{0.833422f,0.324635f,0.434366f},{0.836801f,0.329105f,0.430905f},{0.840155f,0.333580f,0.427455f},{0.843484f,0.338062f,0.424013f},{0.846788f,0.342551f,0.420579f},{0.850066f,0.347048f,0.417153f},{0.853319f,0.351553f,0.413734f},{0.856547f,0.356066f,0.410322f},{0.859750f,0.360588f,0.406917f},{0.862927f,0.365119f,0.403519f},{0.866078f,0.369660f,0.400126f},{0.869203f,0.374212f,0.396738f},{0.872303f,0.378774f,0.393355f},{0.875376f,0.383347f,0.389976f},{0.878423f,0.387932f,0.386600f},{0.881443f,0.392529f,0.383229f},{0.884436f,0.397139f,0.379860f},{0.887402f,0.401762f,0.376494f},{0.890340f,0.406398f,0.373130f},{0.893250f,0.411048f,0.369768f},{0.896131f,0.415712f,0.366407f},{0.898984f,0.420392f,0.363047f},{0.901807f,0.425087f,0.359688f},{0.904601f,0.429797f,0.356329f},{0.907365f,0.434524f,0.352970f},{0.910098f,0.439268f,0.349610f},{0.912800f,0.444029f,0.346251f},{0.915471f,0.448807f,0.342890f},{0.918109f,0.453603f,0.339529f},{0.920714f,0.458417f,0.336166f},{0.923287f,0.463251f,0.332801f},{0.925825f,0.468103f,0.329435f},{0.928329f,0.472975f,0.326067f},{0.930798f,0.477867f,0.322697f},{0.933232f,0.482780f,0.319325f},{0.935630f,0.487712f,0.315952f},{0.937990f,0.492667f,0.312575f},{0.940313f,0.497642f,0.309197f},{0.942598f,0.502639f,0.305816f},{0.944844f,0.507658f,0.302433f},{0.947051f,0.512699f,0.299049f},{0.949217f,0.517763f,0.295662f},{0.951344f,0.522850f,0.292275f},{0.953428f,0.527960f,0.288883f},{0.955470f,0.533093f,0.285490f},{0.957469f,0.538250f,0.282096f},{0.959424f,0.543431f,0.278701f},{0.961336f,0.548636f,0.275305f},{0.963203f,0.553865f,0.271909f},{0.965024f,0.559118f,0.268513f},{0.966798f,0.564396f,0.265118f},{0.968526f,0.569700f,0.261721f},{0.970205f,0.575028f,0.258325f},{0.971835f,0.580382f,0.254931f},{0.973416f,0.585761f,0.251540f},{0.974947f,0.591165f,0.248151f},{0.976428f,0.596595f,0.244767f},{0.977856f,0.602051f,0.241387f},{0.979233f,0.607532f,0.238013f},{0.980556f,0.613039f,0.234646f},{0.981826f,0.618572f,0.231287f},{0.983041f,0.624131f,0.227937f},{0.984199f,0.629718f,0.224595f},{0.985301f,0.635330f,0.221265f},{0.986345f,0.640969f,0.217948f},{0.987332f,0.646633f,0.214648f},{0.988260f,0.652325f,0.211364f},{0.989128f,0.658043f,0.208100f},{0.989935f,0.663787f,0.204859f},{0.990681f,0.669558f,0.201642f},{0.991365f,0.675355f,0.198453f},{0.991985f,0.681179f,0.195295f},{0.992541f,0.687030f,0.192170f},{0.993032f,0.692907f,0.189084f},{0.993456f,0.698810f,0.186041f},{0.993814f,0.704741f,0.183043f},{0.994103f,0.710698f,0.180097f},{0.994324f,0.716681f,0.177208f},{0.994474f,0.722691f,0.174381f},{0.994553f,0.728728f,0.171622f},{0.994561f,0.734791f,0.168938f},{0.994495f,0.740880f,0.166335f},{0.994355f,0.746995f,0.163821f},{0.994141f,0.753137f,0.161404f},{0.993851f,0.759304f,0.159092f},{0.993482f,0.765499f,0.156891f},{0.993033f,0.771720f,0.154808f},{0.992505f,0.777967f,0.152855f},{0.991897f,0.784239f,0.151042f},{0.991209f,0.790537f,0.149377f},{0.990439f,0.796859f,0.147870f},{0.989587f,0.803205f,0.146529f},{0.988648f,0.809579f,0.145357f},{0.987621f,0.815978f,0.144363f},{0.986509f,0.822401f,0.143557f},{0.985314f,0.828846f,0.142945f},{0.984031f,0.835315f,0.142528f},{0.982653f,0.841812f,0.142303f},{0.981190f,0.848329f,0.142279f},{0.979644f,0.854866f,0.142453f},{0.977995f,0.861432f,0.142808f},{0.976265f,0.868016f,0.143351f},{0.974443f,0.874622f,0.144061f},{0.972530f,0.881250f,0.144923f},{0.970533f,0.887896f,0.145919f},{0.968443f,0.894564f,0.147014f},{0.966271f,0.901249f,0.148180f},{0.964021f,0.907950f,0.149370f},{0.961681f,0.914672f,0.150520f},{0.959276f,0.921407f,0.151566f},{0.956808f,0.928152f,0.152409f},{0.954287f,0.934908f,0.152921f},{0.951726f,0.941671f,0.152925f},{0.949151f,0.948435f,0.152178f},{0.946602f,0.955190f,0.150328f},{0.944152f,0.961916f,0.146861f},{0.941896f,0.968590f,0.140956f},{0.940015f,0.975158f,0.131326f}}}},
  {"cividis", {{{0.000000f,0.135112f,0.304751f},{0.000000f,0.138068f,0.311105f},{0.000000f,0.141013f,0.317579f},{0.000000f,0.143951f,0.323982f},{0.000000f,0.146877f,0.330479f},{0.000000f,0.149791f,0.337065f},{0.000000f,0.152673f,0.343704f},{0.000000f,0.155377f,0.350500f},{0.000000f,0.157932f,0.357521f},{0.000000f,0.160495f,0.364534f},{0.000000f,0.163058f,0.371608f},{0.000000f,0.165621f,0.378769f},{0.000000f,0.168204f,0.385902f},{0.000000f,0.170800f,0.393100f},{0.000000f,0.173420f,0.400353f},{0.000000f,0.176082f,0.407577f},{0.000000f,0.178802f,0.414764f},{0.000000f,0.181610f,0.421859f},{0.000000f,0.184550f,0.428802f},{0.000000f,0.186915f,0.435532f},{0.000000f,0.188769f,0.439563f},{0.000000f,0.190950f,0.441085f},{0.000000f,0.193366f,0.441561f},{0.003602f,0.195911f,0.441564f},{0.017852f,0.198528f,0.441248f},{0.032110f,0.201199f,0.440785f},{0.046205f,0.203903f,0.440196f},{0.058378f,0.206629f,0.439531f},{0.068968f,0.209372f,0.438863f},{0.078624f,0.212122f,0.438105f},{0.087465f,0.214879f,0.437342f},{0.095645f,0.217643f,0.436593f},{0.103401f,0.220406f,0.435790f},{0.110658f,0.223170f,0.435067f},{0.117612f,0.225935f,0.434308f},{0.124291f,0.228697f,0.433547f},{0.130669f,0.231458f,0.432840f},{0.136830f,0.234216f,0.432148f},{0.142852f,0.236972f,0.431404f},{0.148638f,0.239724f,0.430752f},{0.154261f,0.242475f,0.430120f},{0.159733f,0.245221f,0.429528f},{0.165113f,0.247965f,0.428908f},{0.170362f,0.250707f,0.428325f},{0.175490f,0.253444f,0.427790f},{0.180503f,0.256180f,0.427299f},{0.185453f,0.258914f,0.426788f},{0.190303f,0.261644f,0.426329f},{0.195057f,0.264372f,0.425924f},{0.199764f,0.267099f,0.425497f},{0.204385f,0.269823f,0.425126f},{0.208926f,0.272546f,0.424809f},{0.213431f,0.275266f,0.424480f},{0.217863f,0.277985f,0.424206f},{0.222264f,0.280702f,0.423914f},{0.226598f,0.283419f,0.423678f},{0.230871f,0.286134f,0.423498f},{0.235120f,0.288848f,0.423304f},{0.239312f,0.291562f,0.423167f},{0.243485f,0.294274f,0.423014f},{0.247605f,0.296986f,0.422917f},{0.251675f,0.299698f,0.422873f},{0.255731f,0.302409f,0.422814f},{0.259740f,0.305120f,0.422810f},{0.263738f,0.307831f,0.422789f},{0.267693f,0.310542f,0.422821f},{0.271639f,0.313253f,0.422837f},{0.275513f,0.315965f,0.422979f},{0.279411f,0.318677f,0.423031f},{0.283240f,0.321390f,0.423211f},{0.287065f,0.324103f,0.423373f},{0.290884f,0.326816f,0.423517f},{0.294669f,0.329531f,0.423716f},{0.298421f,0.332247f,0.423973f},{0.302169f,0.334963f,0.424213f},{0.305886f,0.337681f,0.424512f},{0.309601f,0.340399f,0.424790f},{0.313287f,0.343120f,0.425120f},{0.316941f,0.345842f,0.425512f},{0.320595f,0.348565f,0.425889f},{0.324250f,0.351289f,0.426250f},{0.327875f,0.354016f,0.426670f},{0.331474f,0.356744f,0.427144f},{0.335073f,0.359474f,0.427605f},{0.338673f,0.362206f,0.428053f},{0.342246f,0.364939f,0.428559f},{0.345793f,0.367676f,0.429127f},{0.349341f,0.370414f,0.429685f},{0.352892f,0.373153f,0.430226f},{0.356418f,0.375896f,0.430823f},{0.359916f,0.378641f,0.431501f},{0.363446f,0.381388f,0.432075f},{0.366923f,0.384139f,0.432796f},{0.370430f,0.386890f,0.433428f},{0.373884f,0.389646f,0.434209f},{0.377371f,0.392404f,0.434890f},{0.380830f,0.395164f,0.435653f},{0.384268f,0.397928f,0.436475f},{0.387705f,0.400694f,0.437305f},{0.391151f,0.403464f,0.438096f},{0.394568f,0.406236f,0.438986f},{0.397991f,0.409011f,0.439848f},{0.401418f,0.411790f,0.440708f},{0.404820f,0.414572f,0.441642f},{0.408226f,0.417357f,0.442570f},{0.411607f,0.420145f,0.443577f},{0.414992f,0.422937f,0.444578f},{0.418383f,0.425733f,0.445560f},{0.421748f,0.428531f,0.446640f},{0.425120f,0.431334f,0.447692f},{0.428462f,0.434140f,0.448864f},{0.431817f,0.436950f,0.449982f},{0.435168f,0.439763f,0.451134f},{0.438504f,0.442580f,0.452341f},{0.441810f,0.445402f,0.453659f},{0.445148f,0.448226f,0.454885f},{0.448447f,0.451053f,0.456264f},{0.451759f,0.453887f,0.457582f},{0.455072f,0.456718f,0.458976f},{0.458366f,0.459552f,0.460457f},{0.461616f,0.462405f,0.461969f},{0.464947f,0.465241f,0.463395f},{0.468254f,0.468083f,0.464908f},{0.471501f,0.470960f,0.466357f},{0.474812f,0.473832f,0.467681f},{0.478186f,0.476699f,0.468845f},{0.481622f,0.479573f,0.469767f},{0.485141f,0.482451f,0.470384f},{0.488697f,0.485318f,0.471008f},{0.492278f,0.488198f,0.471453f},{0.495913f,0.491076f,0.471751f},{0.499552f,0.493960f,0.472032f},{0.503185f,0.496851f,0.472305f},{0.506866f,0.499743f,0.472432f},{0.510540f,0.502643f,0.472550f},{0.514226f,0.505546f,0.472640f},{0.517920f,0.508454f,0.472707f},{0.521643f,0.511367f,0.472639f},{0.525348f,0.514285f,0.472660f},{0.529086f,0.517207f,0.472543f},{0.532829f,0.520135f,0.472401f},{0.536553f,0.523067f,0.472352f},{0.540307f,0.526005f,0.472163f},{0.544069f,0.528948f,0.471947f},{0.547840f,0.531895f,0.471704f},{0.551612f,0.534849f,0.471439f},{0.555393f,0.537807f,0.471147f},{0.559181f,0.540771f,0.470829f},{0.562972f,0.543741f,0.470488f},{0.566802f,0.546715f,0.469988f},{0.570607f,0.549695f,0.469593f},{0.574417f,0.552682f,0.469172f},{0.578236f,0.555673f,0.468724f},{0.582087f,0.558670f,0.468118f},{0.585916f,0.561674f,0.467618f},{0.589753f,0.564682f,0.467090f},{0.593622f,0.567697f,0.466401f},{0.597469f,0.570718f,0.465821f},{0.601354f,0.573743f,0.465074f},{0.605211f,0.576777f,0.464441f},{0.609105f,0.579816f,0.463638f},{0.612977f,0.582861f,0.462950f},{0.616852f,0.585913f,0.462237f},{0.620765f,0.588970f,0.461351f},{0.624654f,0.592034f,0.460583f},{0.628576f,0.595104f,0.459641f},{0.632506f,0.598180f,0.458668f},{0.636412f,0.601264f,0.457818f},{0.640352f,0.604354f,0.456791f},{0.644270f,0.607450f,0.455886f},{0.648222f,0.610553f,0.454801f},{0.652178f,0.613664f,0.453689f},{0.656114f,0.616780f,0.452702f},{0.660082f,0.619904f,0.451534f},{0.664055f,0.623034f,0.450338f},{0.668008f,0.626171f,0.449270f},{0.671991f,0.629316f,0.448018f},{0.675981f,0.632468f,0.446736f},{0.679979f,0.635626f,0.445424f},{0.683950f,0.638793f,0.444251f},{0.687957f,0.641966f,0.442886f},{0.691971f,0.645145f,0.441491f},{0.695985f,0.648334f,0.440072f},{0.700008f,0.651529f,0.438624f},{0.704037f,0.654731f,0.437147f},{0.708067f,0.657942f,0.435647f},{0.712105f,0.661160f,0.434117f},{0.716177f,0.664384f,0.432386f},{0.720222f,0.667618f,0.430805f},{0.724274f,0.670859f,0.429194f},{0.728334f,0.674107f,0.427554f},{0.732422f,0.677364f,0.425717f},{0.736488f,0.680629f,0.424028f},{0.740589f,0.683900f,0.422131f},{0.744664f,0.687181f,0.420393f},{0.748772f,0.690470f,0.418448f},{0.752886f,0.693766f,0.416472f},{0.756975f,0.697071f,0.414659f},{0.761096f,0.700384f,0.412638f},{0.765223f,0.703705f,0.410587f},{0.769353f,0.707035f,0.408516f},{0.773486f,0.710373f,0.406422f},{0.777651f,0.713719f,0.404112f},{0.781795f,0.717074f,0.401966f},{0.785965f,0.720438f,0.399613f},{0.790116f,0.723810f,0.397423f},{0.794298f,0.727190f,0.395016f},{0.798480f,0.730580f,0.392597f},{0.802667f,0.733978f,0.390153f},{0.806859f,0.737385f,0.387684f},{0.811054f,0.740801f,0.385198f},{0.815274f,0.744226f,0.382504f},{0.819499f,0.747659f,0.379785f},{0.823729f,0.751101f,0.377043f},{0.827959f,0.754553f,0.374292f},{0.832192f,0.758014f,0.371529f},{0.836429f,0.761483f,0.368747f},{0.840693f,0.764962f,0.365746f},{0.844957f,0.768450f,0.362741f},{0.849223f,0.771947f,0.359729f},{0.853515f,0.775454f,0.356500f},{0.857809f,0.778969f,0.353259f},{0.862105f,0.782494f,0.350011f},{0.866421f,0.786028f,0.346571f},{0.870717f,0.789572f,0.343333f},{0.875057f,0.793125f,0.339685f},{0.879378f,0.796687f,0.336241f},{0.883720f,0.800258f,0.332599f},{0.888081f,0.803839f,0.328770f},{0.892440f,0.807430f,0.324968f},{0.896818f,0.811030f,0.320982f},{0.901195f,0.814639f,0.317021f},{0.905589f,0.818257f,0.312889f},{0.910000f,0.821885f,0.308594f},{0.914407f,0.825522f,0.304348f},{0.918828f,0.829168f,0.299960f},{0.923279f,0.832822f,0.295244f},{0.927724f,0.836486f,0.290611f},{0.932180f,0.840159f,0.285880f},{0.936660f,0.843841f,0.280876f},{0.941147f,0.847530f,0.275815f},{0.945654f,0.851228f,0.270532f},{0.950178f,0.854933f,0.265085f},{0.954725f,0.858646f,0.259365f},{0.959284f,0.862365f,0.253563f},{0.963872f,0.866089f,0.247445f},{0.968469f,0.869819f,0.241310f},{0.973114f,0.873550f,0.234677f},{0.977780f,0.877281f,0.227954f},{0.982497f,0.881008f,0.220878f},{0.987293f,0.884718f,0.213336f},{0.992218f,0.888385f,0.205468f},{0.994847f,0.892954f,0.203445f},{0.995249f,0.898384f,0.207561f},{0.995503f,0.903866f,0.212370f},{0.995737f,0.909344f,0.217772f}}}},
  {"turbo", {{{0.189950f,0.071760f,0.232170f},{0.194830f,0.083390f,0.261490f},{0.199560f,0.094980f,0.290240f},{0.204150f,0.106520f,0.318440f},{0.208600f,0.118020f,0.346070f},{0.212910f,0.129470f,0.373140f},{0.217080f,0.140870f,0.399640f},{0.221110f,0.152230f,0.425580f},{0.225000f,0.163540f,0.450960f},{0.228750f,0.174810f,0.475780f},{0.232360f,0.186030f,0.500040f},{0.235820f,0.197200f,0.523730f},{0.239150f,0.208330f,0.546860f},{0.242340f,0.219410f,0.569420f},{0.245390f,0.230440f,0.591420f},{0.248300f,0.241430f,0.612860f},{0.251070f,0.252370f,0.633740f},{0.253690f,0.263270f,0.654060f},{0.256180f,0.274120f,0.673810f},{0.258530f,0.284920f,0.693000f},{0.260740f,0.295680f,0.711620f},{0.262800f,0.306390f,0.729680f},{0.264730f,0.317060f,0.747180f},{0.266520f,0.327680f,0.764120f},{0.268160f,0.338250f,0.780500f},{0.269670f,0.348780f,0.796310f},{0.271030f,0.359260f,0.811560f},{0.272260f,0.369700f,0.826240f},{0.273340f,0.380080f,0.840370f},{0.274290f,0.390430f,0.853930f},{0.275090f,0.400720f,0.866920f},{0.275760f,0.410970f,0.879360f},{0.276280f,0.421180f,0.891230f},{0.276670f,0.431340f,0.902540f},{0.276910f,0.441450f,0.913280f},{0.277010f,0.451520f,0.923470f},{0.276980f,0.461530f,0.933090f},{0.276800f,0.471510f,0.942140f},{0.276480f,0.481440f,0.950640f},{0.276030f,0.491320f,0.958570f},{0.275430f,0.501150f,0.965940f},{0.274690f,0.510940f,0.972750f},{0.273810f,0.520690f,0.978990f},{0.272730f,0.530400f,0.984610f},{0.271060f,0.540150f,0.989300f},{0.268780f,0.549950f,0.993030f},{0.265920f,0.559790f,0.995830f},{0.262520f,0.569670f,0.997730f},{0.258620f,0.579580f,0.998760f},{0.254250f,0.589500f,0.998960f},{0.249460f,0.599430f,0.998350f},{0.244270f,0.609370f,0.996970f},{0.238740f,0.619310f,0.994850f},{0.232880f,0.629230f,0.992020f},{0.226760f,0.639130f,0.988510f},{0.220390f,0.649010f,0.984360f},{0.213820f,0.658860f,0.979590f},{0.207080f,0.668660f,0.974230f},{0.200210f,0.678420f,0.968330f},{0.193260f,0.688120f,0.961900f},{0.186250f,0.697750f,0.954980f},{0.179230f,0.707320f,0.947610f},{0.172230f,0.716800f,0.939810f},{0.165290f,0.726200f,0.931610f},{0.158440f,0.735510f,0.923050f},{0.151730f,0.744720f,0.914160f},{0.145190f,0.753810f,0.904960f},{0.138860f,0.762790f,0.895500f},{0.132780f,0.771650f,0.885800f},{0.126980f,0.780370f,0.875900f},{0.121510f,0.788960f,0.865810f},{0.116390f,0.797400f,0.855590f},{0.111670f,0.805690f,0.845250f},{0.107380f,0.813810f,0.834840f},{0.103570f,0.821770f,0.824370f},{0.100260f,0.829550f,0.813890f},{0.097500f,0.837140f,0.803420f},{0.095320f,0.844550f,0.792990f},{0.093770f,0.851750f,0.782640f},{0.092870f,0.858750f,0.772400f},{0.092670f,0.865540f,0.762300f},{0.093200f,0.872110f,0.752370f},{0.094510f,0.878440f,0.742650f},{0.096620f,0.884540f,0.733160f},{0.099580f,0.890400f,0.723930f},{0.103420f,0.896000f,0.715000f},{0.108150f,0.901420f,0.705990f},{0.113740f,0.906730f,0.696510f},{0.120140f,0.911930f,0.686600f},{0.127330f,0.917010f,0.676270f},{0.135260f,0.921970f,0.665560f},{0.143910f,0.926800f,0.654480f},{0.153230f,0.931510f,0.643080f},{0.163190f,0.936090f,0.631370f},{0.173770f,0.940530f,0.619380f},{0.184910f,0.944840f,0.607130f},{0.196590f,0.949010f,0.594660f},{0.208770f,0.953040f,0.581990f},{0.221420f,0.956920f,0.569140f},{0.234490f,0.960650f,0.556140f},{0.247970f,0.964230f,0.543030f},{0.261800f,0.967650f,0.529810f},{0.275970f,0.970920f,0.516530f},{0.290420f,0.974030f,0.503210f},{0.305130f,0.976970f,0.489870f},{0.320060f,0.979740f,0.476540f},{0.335170f,0.982340f,0.463250f},{0.350430f,0.984770f,0.450020f},{0.365810f,0.987020f,0.436880f},{0.381270f,0.989090f,0.423860f},{0.396780f,0.990980f,0.410980f},{0.412290f,0.992680f,0.398260f},{0.427780f,0.994190f,0.385750f},{0.443210f,0.995510f,0.373450f},{0.458540f,0.996630f,0.361400f},{0.473750f,0.997550f,0.349630f},{0.488790f,0.998280f,0.338160f},{0.503620f,0.998790f,0.327010f},{0.518220f,0.999100f,0.316220f},{0.532550f,0.999190f,0.305810f},{0.546580f,0.999070f,0.295810f},{0.560260f,0.998730f,0.286230f},{0.573570f,0.998170f,0.277120f},{0.586460f,0.997390f,0.268490f},{0.598910f,0.996380f,0.260380f},{0.610880f,0.995140f,0.252800f},{0.622330f,0.993660f,0.245790f},{0.633230f,0.991950f,0.239370f},{0.643620f,0.989990f,0.233560f},{0.653940f,0.987750f,0.228350f},{0.664280f,0.985240f,0.223700f},{0.674620f,0.982460f,0.219600f},{0.684940f,0.979410f,0.216020f},{0.695250f,0.976100f,0.212940f},{0.705530f,0.972550f,0.210320f},{0.715770f,0.968750f,0.208150f},{0.725960f,0.964700f,0.206400f},{0.736100f,0.960430f,0.205040f},{0.746170f,0.955930f,0.204060f},{0.756170f,0.951210f,0.203430f},{0.766080f,0.946270f,0.203110f},{0.775910f,0.941130f,0.203100f},{0.785630f,0.935790f,0.203360f},{0.795240f,0.930250f,0.203860f},{0.804730f,0.924520f,0.204590f},{0.814100f,0.918610f,0.205520f},{0.823330f,0.912530f,0.206630f},{0.832410f,0.906270f,0.207880f},{0.841330f,0.899860f,0.209260f},{0.850100f,0.893280f,0.210740f},{0.858680f,0.886550f,0.212300f},{0.867090f,0.879680f,0.213910f},{0.875300f,0.872670f,0.215550f},{0.883310f,0.865530f,0.217190f},{0.891120f,0.858260f,0.218800f},{0.898700f,0.850870f,0.220380f},{0.906050f,0.843370f,0.221880f},{0.913170f,0.835760f,0.223280f},{0.920040f,0.828060f,0.224560f},{0.926660f,0.820250f,0.225700f},{0.933010f,0.812360f,0.226670f},{0.939090f,0.804390f,0.227440f},{0.944890f,0.796340f,0.228000f},{0.950390f,0.788230f,0.228310f},{0.955600f,0.780050f,0.228360f},{0.960490f,0.771810f,0.228110f},{0.965070f,0.763520f,0.227540f},{0.969310f,0.755190f,0.226630f},{0.973230f,0.746820f,0.225360f},{0.976790f,0.738420f,0.223690f},{0.980000f,0.730000f,0.221610f},{0.982890f,0.721400f,0.219180f},{0.985490f,0.712500f,0.216500f},{0.987810f,0.703300f,0.213580f},{0.989860f,0.693820f,0.210430f},{0.991630f,0.684080f,0.207060f},{0.993140f,0.674080f,0.203480f},{0.994380f,0.663860f,0.199710f},{0.995350f,0.653410f,0.195770f},{0.996070f,0.642770f,0.191650f},{0.996540f,0.631930f,0.187380f},{0.996750f,0.620930f,0.182970f},{0.996720f,0.609770f,0.178420f},{0.996440f,0.598460f,0.173760f},{0.995930f,0.587030f,0.168990f},{0.995170f,0.575490f,0.164120f},{0.994190f,0.563860f,0.159180f},{0.992970f,0.552140f,0.154170f},{0.991530f,0.540360f,0.149100f},{0.989870f,0.528540f,0.143980f},{0.987990f,0.516670f,0.138830f},{0.985900f,0.504790f,0.133670f},{0.983600f,0.492910f,0.128490f},{0.981080f,0.481040f,0.123320f},{0.978370f,0.469200f,0.118170f},{0.975450f,0.457400f,0.113050f},{0.972340f,0.445650f,0.107970f},{0.969040f,0.433990f,0.102940f},{0.965550f,0.422410f,0.097980f},{0.961870f,0.410930f,0.093100f},{0.958010f,0.399580f,0.088310f},{0.953980f,0.388360f,0.083620f},{0.949770f,0.377290f,0.079050f},{0.945380f,0.366380f,0.074610f},{0.940840f,0.355660f,0.070310f},{0.936120f,0.345130f,0.066160f},{0.931250f,0.334820f,0.062180f},{0.926230f,0.324730f,0.058370f},{0.921050f,0.314890f,0.054750f},{0.915720f,0.305300f,0.051340f},{0.910240f,0.295990f,0.048140f},{0.904630f,0.286960f,0.045160f},{0.898880f,0.278240f,0.042430f},{0.892980f,0.269810f,0.039930f},{0.886910f,0.261520f,0.037530f},{0.880660f,0.253340f,0.035210f},{0.874220f,0.245260f,0.032970f},{0.867600f,0.237300f,0.030820f},{0.860790f,0.229450f,0.028750f},{0.853800f,0.221700f,0.026770f},{0.846620f,0.214070f,0.024870f},{0.839260f,0.206540f,0.023050f},{0.831720f,0.199120f,0.021310f},{0.823990f,0.191820f,0.019660f},{0.816080f,0.184620f,0.018090f},{0.807990f,0.177530f,0.016600f},{0.799710f,0.170550f,0.015200f},{0.791250f,0.163680f,0.013870f},{0.782600f,0.156930f,0.012640f},{0.773770f,0.150280f,0.011480f},{0.764760f,0.143740f,0.010410f},{0.755560f,0.137310f,0.009420f},{0.746170f,0.130980f,0.008510f},{0.736610f,0.124770f,0.007690f},{0.726860f,0.118670f,0.006950f},{0.716920f,0.112680f,0.006290f},{0.706800f,0.106800f,0.005710f},{0.696500f,0.101020f,0.005220f},{0.686020f,0.095360f,0.004810f},{0.675350f,0.089800f,0.004490f},{0.664490f,0.084360f,0.004240f},{0.653450f,0.079020f,0.004080f},{0.642230f,0.073800f,0.004010f},{0.630820f,0.068680f,0.004010f},{0.619230f,0.063670f,0.004100f},{0.607460f,0.058780f,0.004270f},{0.595500f,0.053990f,0.004530f},{0.583360f,0.049310f,0.004860f},{0.571030f,0.044740f,0.005290f},{0.558520f,0.040280f,0.005790f},{0.545830f,0.035930f,0.006380f},{0.532950f,0.031690f,0.007050f},{0.519890f,0.027560f,0.007800f},{0.506640f,0.023540f,0.008630f},{0.493210f,0.019630f,0.009550f},{0.479600f,0.015830f,0.010550f}}}},
  {"hot", {{{0.041600f,0.000000f,0.000000f},{0.051895f,0.000000f,0.000000f},{0.062190f,0.000000f,0.000000f},{0.072485f,0.000000f,0.000000f},{0.082779f,0.000000f,0.000000f},{0.093074f,0.000000f,0.000000f},{0.103369f,0.000000f,0.000000f},{0.113664f,0.000000f,0.000000f},{0.123959f,0.000000f,0.000000f},{0.134254f,0.000000f,0.000000f},{0.144548f,0.000000f,0.000000f},{0.154843f,0.000000f,0.000000f},{0.165138f,0.000000f,0.000000f},{0.175433f,0.000000f,0.000000f},{0.185728f,0.000000f,0.000000f},{0.196023f,0.000000f,0.000000f},{0.206318f,0.000000f,0.000000f},{0.216612f,0.000000f,0.000000f},{0.226907f,0.000000f,0.000000f},{0.237202f,0.000000f,0.000000f},{0.247497f,0.000000f,0.000000f},{0.257792f,0.000000f,0.000000f},{0.268087f,0.000000f,0.000000f},{0.278381f,0.000000f,0.000000f},{0.288676f,0.000000f,0.000000f},{0.298971f,0.000000f,0.000000f},{0.309266f,0.000000f,0.000000f},{0.319561f,0.000000f,0.000000f},{0.329856f,0.000000f,0.000000f},{0.340150f,0.000000f,0.000000f},{0.350445f,0.000000f,0.000000f},{0.360740f,0.000000f,0.000000f},{0.371035f,0.000000f,0.000000f},{0.381330f,0.000000f,0.000000f},{0.391625f,0.000000f,0.000000f},{0.401920f,0.000000f,0.000000f},{0.412214f,0.000000f,0.000000f},{0.422509f,0.000000f,0.000000f},{0.432804f,0.000000f,0.000000f},{0.443099f,0.000000f,0.000000f},{0.453394f,0.000000f,0.000000f},{0.463689f,0.000000f,0.000000f},{0.473983f,0.000000f,0.000000f},{0.484278f,0.000000f,0.000000f},{0.494573f,0.000000f,0.000000f},{0.504868f,0.000000f,0.000000f},{0.515163f,0.000000f,0.000000f},{0.525458f,0.000000f,0.000000f},{0.535753f,0.000000f,0.000000f},{0.546047f,0.000000f,0.000000f},{0.556342f,0.000000f,0.000000f},{0.566637f,0.000000f,0.000000f},{0.576932f,0.000000f,0.000000f},{0.587227f,0.000000f,0.000000f},{0.597522f,0.000000f,0.000000f},{0.607816f,0.000000f,0.000000f},{0.618111f,0.000000f,0.000000f},{0.628406f,0.000000f,0.000000f},{0.638701f,0.000000f,0.000000f},{0.648996f,0.000000f,0.000000f},{0.659291f,0.000000f,0.000000f},{0.669585f,0.000000f,0.000000f},{0.679880f,0.000000f,0.000000f},{0.690175f,0.000000f,0.000000f},{0.700470f,0.000000f,0.000000f},{0.710765f,0.000000f,0.000000f},{0.721060f,0.000000f,0.000000f},{0.731355f,0.000000f,0.000000f},{0.741649f,0.000000f,0.000000f},{0.751944f,0.000000f,0.000000f},{0.762239f,0.000000f,0.000000f},{0.772534f,0.000000f,0.000000f},{0.782829f,0.000000f,0.000000f},{0.793124f,0.000000f,0.000000f},{0.803418f,0.000000f,0.000000f},{0.813713f,0.000000f,0.000000f},{0.824008f,0.000000f,0.000000f},{0.834303f,0.000000f,0.000000f},{0.844598f,0.000000f,0.000000f},{0.854893f,0.000000f,0.000000f},{0.865188f,0.000000f,0.000000f},{0.875482f,0.000000f,0.000000f},{0.885777f,0.000000f,0.000000f},{0.896072f,0.000000f,0.000000f},{0.906367f,0.000000f,0.000000f},{0.916662f,0.000000f,0.000000f},{0.926957f,0.000000f,0.000000f},{0.937251f,0.000000f,0.000000f},{0.947546f,0.000000f,0.000000f},{0.957841f,0.000000f,0.000000f},{0.968136f,0.000000f,0.000000f},{0.978431f,0.000000f,0.000000f},{0.988726f,0.000000f,0.000000f},{0.999020f,0.000000f,0.000000f},{1.000000f,0.009315f,0.000000f},{1.000000f,0.019609f,0.000000f},{1.000000f,0.029903f,0.000000f},{1.000000f,0.040197f,0.000000f},{1.000000f,0.050491f,0.000000f},{1.000000f,0.060785f,0.000000f},{1.000000f,0.071079f,0.000000f},{1.000000f,0.081373f,0.000000f},{1.000000f,0.091667f,0.000000f},{1.000000f,0.101962f,0.000000f},{1.000000f,0.112256f,0.000000f},{1.000000f,0.122550f,0.000000f},{1.000000f,0.132844f,0.000000f},{1.000000f,0.143138f,0.000000f},{1.000000f,0.153432f,0.000000f},{1.000000f,0.163726f,0.000000f},{1.000000f,0.174020f,0.000000f},{1.000000f,0.184314f,0.000000f},{1.000000f,0.194608f,0.000000f},{1.000000f,0.204903f,0.000000f},{1.000000f,0.215197f,0.000000f},{1.000000f,0.225491f,0.000000f},{1.000000f,0.235785f,0.000000f},{1.000000f,0.246079f,0.000000f},{1.000000f,0.256373f,0.000000f},{1.000000f,0.266667f,0.000000f},{1.000000f,0.276961f,0.000000f},{1.000000f,0.287255f,0.000000f},{1.000000f,0.297549f,0.000000f},{1.000000f,0.307844f,0.000000f},{1.000000f,0.318138f,0.000000f},{1.000000f,0.328432f,0.000000f},{1.000000f,0.338726f,0.000000f},{1.000000f,0.349020f,0.000000f},{1.000000f,0.359314f,0.000000f},{1.000000f,0.369608f,0.000000f},{1.000000f,0.379902f,0.000000f},{1.000000f,0.390196f,0.000000f},{1.000000f,0.400491f,0.000000f},{1.000000f,0.410785f,0.000000f},{1.000000f,0.421079f,0.000000f},{1.000000f,0.431373f,0.000000f},{1.000000f,0.441667f,0.000000f},{1.000000f,0.451961f,0.000000f},{1.000000f,0.462255f,0.000000f},{1.000000f,0.472549f,0.000000f},{1.000000f,0.482843f,0.000000f},{1.000000f,0.493137f,0.000000f},{1.000000f,0.503432f,0.000000f},{1.000000f,0.513726f,0.000000f},{1.000000f,0.524020f,0.000000f},{1.000000f,0.534314f,0.000000f},{1.000000f,0.544608f,0.000000f},{1.000000f,0.554902f,0.000000f},{1.000000f,0.565196f,0.000000f},{1.000000f,0.575490f,0.000000f},{1.000000f,0.585784f,0.000000f},{1.000000f,0.596078f,0.000000f},{1.000000f,0.606373f,0.000000f},{1.000000f,0.616667f,0.000000f},{1.000000f,0.626961f,0.000000f},{1.000000f,0.637255f,0.000000f},{1.000000f,0.647549f,0.000000f},{1.000000f,0.657843f,0.000000f},{1.000000f,0.668137f,0.000000f},{1.000000f,0.678431f,0.000000f},{1.000000f,0.688725f,0.000000f},{1.000000f,0.699019f,0.000000f},{1.000000f,0.709314f,0.000000f},{1.000000f,0.719608f,0.000000f},{1.000000f,0.729902f,0.000000f},{1.000000f,0.740196f,0.000000f},{1.000000f,0.750490f,0.000000f},{1.000000f,0.760784f,0.000000f},{1.000000f,0.771078f,0.000000f},{1.000000f,0.781372f,0.000000f},{1.000000f,0.791666f,0.000000f},{1.000000f,0.801960f,0.000000f},{1.000000f,0.812255f,0.000000f},{1.000000f,0.822549f,0.000000f},{1.000000f,0.832843f,0.000000f},{1.000000f,0.843137f,0.000000f},{1.000000f,0.853431f,0.000000f},{1.000000f,0.863725f,0.000000f},{1.000000f,0.874019f,0.000000f},{1.000000f,0.884313f,0.000000f},{1.000000f,0.894607f,0.000000f},{1.000000f,0.904901f,0.000000f},{1.000000f,0.915196f,0.000000f},{1.000000f,0.925490f,0.000000f},{1.000000f,0.935784f,0.000000f},{1.000000f,0.946078f,0.000000f},{1.000000f,0.956372f,0.000000f},{1.000000f,0.966666f,0.000000f},{1.000000f,0.976960f,0.000000f},{1.000000f,0.987254f,0.000000f},{1.000000f,0.997548f,0.000000f},{1.000000f,1.000000f,0.011764f},{1.000000f,1.000000f,0.027205f},{1.000000f,1.000000f,0.042646f},{1.000000f,1.000000f,0.058087f},{1.000000f,1.000000f,0.073528f},{1.000000f,1.000000f,0.088970f},{1.000000f,1.000000f,0.104411f},{1.000000f,1.000000f,0.119852f},{1.000000f,1.000000f,0.135293f},{1.000000f,1.000000f,0.150734f},{1.000000f,1.000000f,0.166176f},{1.000000f,1.000000f,0.181617f},{1.000000f,1.000000f,0.197058f},{1.000000f,1.000000f,0.212499f},{1.000000f,1.000000f,0.227940f},{1.000000f,1.000000f,0.243382f},{1.000000f,1.000000f,0.258823f},{1.000000f,1.000000f,0.274264f},{1.000000f,1.000000f,0.289705f},{1.000000f,1.000000f,0.305146f},{1.000000f,1.000000f,0.320588f},{1.000000f,1.000000f,0.336029f},{1.000000f,1.000000f,0.351470f},{1.000000f,1.000000f,0.366911f},{1.000000f,1.000000f,0.382352f},{1.000000f,1.000000f,0.397794f},{1.000000f,1.000000f,0.413235f},{1.000000f,1.000000f,0.428676f},{1.000000f,1.000000f,0.444117f},{1.000000f,1.000000f,0.459558f},{1.000000f,1.000000f,0.474999f},{1.000000f,1.000000f,0.490441f},{1.000000f,1.000000f,0.505882f},{1.000000f,1.000000f,0.521323f},{1.000000f,1.000000f,0.536764f},{1.000000f,1.000000f,0.552205f},{1.000000f,1.000000f,0.567647f},{1.000000f,1.000000f,0.583088f},{1.000000f,1.000000f,0.598529f},{1.000000f,1.000000f,0.613970f},{1.000000f,1.000000f,0.629411f},{1.000000f,1.000000f,0.644853f},{1.000000f,1.000000f,0.660294f},{1.000000f,1.000000f,0.675735f},{1.000000f,1.000000f,0.691176f},{1.000000f,1.000000f,0.706617f},{1.000000f,1.000000f,0.722059f},{1.000000f,1.000000f,0.737500f},{1.000000f,1.000000f,0.752941f},{1.000000f,1.000000f,0.768382f},{1.000000f,1.000000f,0.783823f},{1.000000f,1.000000f,0.799265f},{1.000000f,1.000000f,0.814706f},{1.000000f,1.000000f,0.830147f},{1.000000f,1.000000f,0.845588f},{1.000000f,1.000000f,0.861029f},{1.000000f,1.000000f,0.876470f},{1.000000f,1.000000f,0.891912f},{1.000000f,1.000000f,0.907353f},{1.000000f,1.000000f,0.922794f},{1.000000f,1.000000f,0.938235f},{1.000000f,1.000000f,0.953676f},{1.000000f,1.000000f,0.969118f},{1.000000f,1.000000f,0.984559f},{1.000000f,1.000000f,1.000000f}}}},
  {"bone", {{{0.000000f,0.000000f,0.000000f},{0.003431f,0.003431f,0.004774f},{0.006863f,0.006863f,0.009548f},{0.010294f,0.010294f,0.014322f},{0.013725f,0.013725f,0.019096f},{0.017157f,0.017157f,0.023870f},{0.020588f,0.020588f,0.028645f},{0.024020f,0.024020f,0.033419f},{0.027451f,0.027451f,0.038193f},{0.030882f,0.030882f,0.042967f},{0.034314f,0.034314f,0.047741f},{0.037745f,0.037745f,0.052515f},{0.041176f,0.041176f,0.057289f},{0.044608f,0.044608f,0.062063f},{0.048039f,0.048039f,0.066837f},{0.051471f,0.051471f,0.071611f},{0.054902f,0.054902f,0.076385f},{0.058333f,0.058333f,0.081159f},{0.061765f,0.061765f,0.085934f},{0.065196f,0.065196f,0.090708f},{0.068627f,0.068627f,0.095482f},{0.072059f,0.072059f,0.100256f},{0.075490f,0.075490f,0.105030f},{0.078922f,0.078922f,0.109804f},{0.082353f,0.082353f,0.114578f},{0.085784f,0.085784f,0.119352f},{0.089216f,0.089216f,0.124126f},{0.092647f,0.092647f,0.128900f},{0.096078f,0.096078f,0.133674f},{0.099510f,0.099510f,0.138448f},{0.102941f,0.102941f,0.143223f},{0.106373f,0.106373f,0.147997f},{0.109804f,0.109804f,0.152771f},{0.113235f,0.113235f,0.157545f},{0.116667f,0.116667f,0.162319f},{0.120098f,0.120098f,0.167093f},{0.123529f,0.123529f,0.171867f},{0.126961f,0.126961f,0.176641f},{0.130392f,0.130392f,0.181415f},{0.133824f,0.133823f,0.186189f},{0.137255f,0.137255f,0.190963f},{0.140686f,0.140686f,0.195737f},{0.144118f,0.144118f,0.200512f},{0.147549f,0.147549f,0.205286f},{0.150980f,0.150980f,0.210060f},{0.154412f,0.154412f,0.214834f},{0.157843f,0.157843f,0.219608f},{0.161275f,0.161274f,0.224382f},{0.164706f,0.164706f,0.229156f},{0.168137f,0.168137f,0.233930f},{0.171569f,0.171569f,0.238704f},{0.175000f,0.175000f,0.243478f},{0.178431f,0.178431f,0.248252f},{0.181863f,0.181863f,0.253026f},{0.185294f,0.185294f,0.257801f},{0.188725f,0.188725f,0.262575f},{0.192157f,0.192157f,0.267349f},{0.195588f,0.195588f,0.272123f},{0.199020f,0.199020f,0.276897f},{0.202451f,0.202451f,0.281671f},{0.205882f,0.205882f,0.286445f},{0.209314f,0.209314f,0.291219f},{0.212745f,0.212745f,0.295993f},{0.216176f,0.216176f,0.300767f},{0.219608f,0.219608f,0.305541f},{0.223039f,0.223039f,0.310315f},{0.226471f,0.226470f,0.315090f},{0.229902f,0.229902f,0.319864f},{0.233333f,0.233333f,0.324638f},{0.236765f,0.236765f,0.329412f},{0.240196f,0.240196f,0.334186f},{0.243627f,0.243627f,0.338960f},{0.247059f,0.247059f,0.343734f},{0.250490f,0.250490f,0.348508f},{0.253922f,0.253921f,0.353282f},{0.257353f,0.257353f,0.358056f},{0.260784f,0.260784f,0.362830f},{0.264216f,0.264216f,0.367604f},{0.267647f,0.267647f,0.372379f},{0.271078f,0.271078f,0.377153f},{0.274510f,0.274510f,0.381927f},{0.277941f,0.277941f,0.386701f},{0.281373f,0.281372f,0.391475f},{0.284804f,0.284804f,0.396249f},{0.288235f,0.288235f,0.401023f},{0.291667f,0.291667f,0.405797f},{0.295098f,0.295098f,0.410571f},{0.298529f,0.298529f,0.415345f},{0.301961f,0.301961f,0.420119f},{0.305392f,0.305392f,0.424893f},{0.308824f,0.308823f,0.429668f},{0.312255f,0.312255f,0.434442f},{0.315686f,0.315686f,0.439216f},{0.319118f,0.319118f,0.443990f},{0.322549f,0.323713f,0.447549f},{0.325980f,0.328431f,0.450980f},{0.329412f,0.333150f,0.454412f},{0.332843f,0.337868f,0.457843f},{0.336275f,0.342586f,0.461274f},{0.339706f,0.347304f,0.464706f},{0.343137f,0.352022f,0.468137f},{0.346569f,0.356740f,0.471569f},{0.350000f,0.361458f,0.475000f},{0.353431f,0.366176f,0.478431f},{0.356863f,0.370895f,0.481863f},{0.360294f,0.375613f,0.485294f},{0.363725f,0.380331f,0.488725f},{0.367157f,0.385049f,0.492157f},{0.370588f,0.389767f,0.495588f},{0.374020f,0.394485f,0.499019f},{0.377451f,0.399203f,0.502451f},{0.380882f,0.403922f,0.505882f},{0.384314f,0.408640f,0.509314f},{0.387745f,0.413358f,0.512745f},{0.391176f,0.418076f,0.516176f},{0.394608f,0.422794f,0.519608f},{0.398039f,0.427512f,0.523039f},{0.401471f,0.432230f,0.526470f},{0.404902f,0.436949f,0.529902f},{0.408333f,0.441667f,0.533333f},{0.411765f,0.446385f,0.536765f},{0.415196f,0.451103f,0.540196f},{0.418627f,0.455821f,0.543627f},{0.422059f,0.460539f,0.547059f},{0.425490f,0.465257f,0.550490f},{0.428922f,0.469975f,0.553921f},{0.432353f,0.474694f,0.557353f},{0.435784f,0.479412f,0.560784f},{0.439216f,0.484130f,0.564216f},{0.442647f,0.488848f,0.567647f},{0.446078f,0.493566f,0.571078f},{0.449510f,0.498284f,0.574510f},{0.452941f,0.503002f,0.577941f},{0.456373f,0.507721f,0.581372f},{0.459804f,0.512439f,0.584804f},{0.463235f,0.517157f,0.588235f},{0.466667f,0.521875f,0.591667f},{0.470098f,0.526593f,0.595098f},{0.473529f,0.531311f,0.598529f},{0.476961f,0.536029f,0.601961f},{0.480392f,0.540748f,0.605392f},{0.483824f,0.545466f,0.608823f},{0.487255f,0.550184f,0.612255f},{0.490686f,0.554902f,0.615686f},{0.494118f,0.559620f,0.619118f},{0.497549f,0.564338f,0.622549f},{0.500980f,0.569056f,0.625980f},{0.504412f,0.573774f,0.629412f},{0.507843f,0.578493f,0.632843f},{0.511275f,0.583211f,0.636274f},{0.514706f,0.587929f,0.639706f},{0.518137f,0.592647f,0.643137f},{0.521569f,0.597365f,0.646569f},{0.525000f,0.602083f,0.650000f},{0.528431f,0.606801f,0.653431f},{0.531863f,0.611520f,0.656863f},{0.535294f,0.616238f,0.660294f},{0.538725f,0.620956f,0.663725f},{0.542157f,0.625674f,0.667157f},{0.545588f,0.630392f,0.670588f},{0.549020f,0.635110f,0.674020f},{0.552451f,0.639828f,0.677451f},{0.555882f,0.644547f,0.680882f},{0.559314f,0.649265f,0.684314f},{0.562745f,0.653983f,0.687745f},{0.566176f,0.658701f,0.691176f},{0.569608f,0.663419f,0.694608f},{0.573039f,0.668137f,0.698039f},{0.576471f,0.672855f,0.701471f},{0.579902f,0.677573f,0.704902f},{0.583333f,0.682292f,0.708333f},{0.586765f,0.687010f,0.711765f},{0.590196f,0.691728f,0.715196f},{0.593627f,0.696446f,0.718627f},{0.597059f,0.701164f,0.722059f},{0.600490f,0.705882f,0.725490f},{0.603922f,0.710600f,0.728922f},{0.607353f,0.715319f,0.732353f},{0.610784f,0.720037f,0.735784f},{0.614216f,0.724755f,0.739216f},{0.617647f,0.729473f,0.742647f},{0.621078f,0.734191f,0.746078f},{0.624510f,0.738909f,0.749510f},{0.627941f,0.743627f,0.752941f},{0.631373f,0.748346f,0.756372f},{0.634804f,0.753064f,0.759804f},{0.638235f,0.757782f,0.763235f},{0.641667f,0.762500f,0.766667f},{0.645098f,0.767218f,0.770098f},{0.648529f,0.771936f,0.773529f},{0.651961f,0.776654f,0.776961f},{0.656863f,0.780392f,0.780392f},{0.662224f,0.783824f,0.783823f},{0.667586f,0.787255f,0.787255f},{0.672947f,0.790686f,0.790686f},{0.678309f,0.794118f,0.794118f},{0.683670f,0.797549f,0.797549f},{0.689032f,0.800980f,0.800980f},{0.694393f,0.804412f,0.804412f},{0.699755f,0.807843f,0.807843f},{0.705116f,0.811275f,0.811274f},{0.710478f,0.814706f,0.814706f},{0.715839f,0.818137f,0.818137f},{0.721201f,0.821569f,0.821569f},{0.726562f,0.825000f,0.825000f},{0.731924f,0.828431f,0.828431f},{0.737285f,0.831863f,0.831863f},{0.742647f,0.835294f,0.835294f},{0.748008f,0.838725f,0.838725f},{0.753370f,0.842157f,0.842157f},{0.758732f,0.845588f,0.845588f},{0.764093f,0.849020f,0.849020f},{0.769455f,0.852451f,0.852451f},{0.774816f,0.855882f,0.855882f},{0.780178f,0.859314f,0.859314f},{0.785539f,0.862745f,0.862745f},{0.790901f,0.866176f,0.866176f},{0.796262f,0.869608f,0.869608f},{0.801624f,0.873039f,0.873039f},{0.806985f,0.876471f,0.876471f},{0.812347f,0.879902f,0.879902f},{0.817708f,0.883333f,0.883333f},{0.823070f,0.886765f,0.886765f},{0.828431f,0.890196f,0.890196f},{0.833793f,0.893627f,0.893627f},{0.839154f,0.897059f,0.897059f},{0.844516f,0.900490f,0.900490f},{0.849877f,0.903922f,0.903922f},{0.855239f,0.907353f,0.907353f},{0.860600f,0.910784f,0.910784f},{0.865962f,0.914216f,0.914216f},{0.871323f,0.917647f,0.917647f},{0.876685f,0.921078f,0.921078f},{0.882047f,0.924510f,0.924510f},{0.887408f,0.927941f,0.927941f},{0.892770f,0.931373f,0.931373f},{0.898131f,0.934804f,0.934804f},{0.903493f,0.938235f,0.938235f},{0.908854f,0.941667f,0.941667f},{0.914216f,0.945098f,0.945098f},{0.919577f,0.948529f,0.948529f},{0.924939f,0.951961f,0.951961f},{0.930300f,0.955392f,0.955392f},{0.935662f,0.958824f,0.958824f},{0.941023f,0.962255f,0.962255f},{0.946385f,0.965686f,0.965686f},{0.951746f,0.969118f,0.969118f},{0.957108f,0.972549f,0.972549f},{0.962469f,0.975980f,0.975980f},{0.967831f,0.979412f,0.979412f},{0.973192f,0.982843f,0.982843f},{0.978554f,0.986275f,0.986275f},{0.983915f,0.989706f,0.989706f},{0.989277f,0.993137f,0.993137f},{0.994638f,0.996569f,0.996569f},{1.000000f,1.000000f,1.000000f}}}},
  {"pink", {{{0.117800f,0.000000f,0.000000f},{0.137085f,0.025415f,0.025415f},{0.156369f,0.050829f,0.050829f},{0.175654f,0.076244f,0.076244f},{0.194939f,0.101659f,0.101659f},{0.208752f,0.112895f,0.112895f},{0.222292f,0.123422f,0.123422f},{0.235832f,0.133949f,0.133949f},{0.249372f,0.144476f,0.144476f},{0.260677f,0.152787f,0.152787f},{0.271747f,0.160865f,0.160865f},{0.282817f,0.168943f,0.168943f},{0.293887f,0.177020f,0.177020f},{0.303696f,0.184011f,0.184011f},{0.313296f,0.190821f,0.190821f},{0.322896f,0.197631f,0.197631f},{0.332496f,0.204441f,0.204441f},{0.341282f,0.210595f,0.210595f},{0.349876f,0.216594f,0.216594f},{0.358471f,0.222594f,0.222594f},{0.367066f,0.228594f,0.228594f},{0.375094f,0.234155f,0.234155f},{0.382946f,0.239579f,0.239579f},{0.390797f,0.245003f,0.245003f},{0.398649f,0.250426f,0.250426f},{0.406087f,0.255539f,0.255539f},{0.413360f,0.260527f,0.260527f},{0.420634f,0.265515f,0.265515f},{0.427907f,0.270503f,0.270503f},{0.434869f,0.275261f,0.275261f},{0.441676f,0.279904f,0.279904f},{0.448482f,0.284546f,0.284546f},{0.455289f,0.289189f,0.289189f},{0.461856f,0.293657f,0.293657f},{0.468276f,0.298017f,0.298017f},{0.474696f,0.302378f,0.302378f},{0.481116f,0.306738f,0.306738f},{0.487348f,0.310964f,0.310964f},{0.493440f,0.315088f,0.315088f},{0.499532f,0.319212f,0.319212f},{0.505624f,0.323336f,0.323336f},{0.511569f,0.327355f,0.327355f},{0.517379f,0.331278f,0.331278f},{0.523189f,0.335201f,0.335201f},{0.528999f,0.339123f,0.339123f},{0.534692f,0.342963f,0.342963f},{0.540256f,0.346711f,0.346711f},{0.545820f,0.350459f,0.350459f},{0.551384f,0.354207f,0.354207f},{0.556855f,0.357889f,0.357889f},{0.562201f,0.361484f,0.361484f},{0.567548f,0.365079f,0.365079f},{0.572894f,0.368674f,0.368674f},{0.578167f,0.372217f,0.372217f},{0.583320f,0.375676f,0.375676f},{0.588473f,0.379135f,0.379135f},{0.593626f,0.382594f,0.382594f},{0.598721f,0.386013f,0.386013f},{0.603700f,0.389351f,0.389351f},{0.608678f,0.392688f,0.392688f},{0.613657f,0.396026f,0.396026f},{0.618591f,0.399333f,0.399333f},{0.623412f,0.402561f,0.402561f},{0.628234f,0.405789f,0.405789f},{0.633056f,0.409017f,0.409017f},{0.637843f,0.412221f,0.412221f},{0.642521f,0.415350f,0.415350f},{0.647199f,0.418478f,0.418478f},{0.651877f,0.421607f,0.421607f},{0.656529f,0.424718f,0.424718f},{0.661076f,0.427756f,0.427756f},{0.665623f,0.430794f,0.430794f},{0.670169f,0.433832f,0.433832f},{0.674699f,0.436858f,0.436858f},{0.679124f,0.439813f,0.439813f},{0.683550f,0.442767f,0.442767f},{0.687976f,0.445722f,0.445722f},{0.692391f,0.448669f,0.448669f},{0.696705f,0.451547f,0.451547f},{0.701019f,0.454425f,0.454425f},{0.705333f,0.457303f,0.457303f},{0.709642f,0.460178f,0.460178f},{0.713852f,0.462985f,0.462985f},{0.718063f,0.465792f,0.465792f},{0.722273f,0.468598f,0.468598f},{0.726483f,0.471405f,0.471405f},{0.730597f,0.474146f,0.474146f},{0.734711f,0.476886f,0.476886f},{0.738825f,0.479627f,0.479627f},{0.742938f,0.482368f,0.482368f},{0.746967f,0.485050f,0.485050f},{0.750990f,0.487729f,0.487729f},{0.755014f,0.490408f,0.490408f},{0.759038f,0.493087f,0.493087f},{0.760971f,0.498754f,0.495714f},{0.762685f,0.504734f,0.498336f},{0.764398f,0.510715f,0.500957f},{0.766111f,0.516695f,0.503579f},{0.767812f,0.522447f,0.506154f},{0.769510f,0.528160f,0.508721f},{0.771208f,0.533873f,0.511288f},{0.772906f,0.539586f,0.513855f},{0.774592f,0.545110f,0.516382f},{0.776275f,0.550588f,0.518898f},{0.777958f,0.556067f,0.521415f},{0.779641f,0.561545f,0.523932f},{0.781314f,0.566865f,0.526412f},{0.782982f,0.572136f,0.528880f},{0.784651f,0.577407f,0.531349f},{0.786319f,0.582678f,0.533817f},{0.787978f,0.587816f,0.536253f},{0.789632f,0.592901f,0.538677f},{0.791286f,0.597986f,0.541100f},{0.792941f,0.603071f,0.543523f},{0.794586f,0.608044f,0.545918f},{0.796226f,0.612961f,0.548299f},{0.797867f,0.617879f,0.550679f},{0.799507f,0.622796f,0.553059f},{0.801139f,0.627620f,0.555415f},{0.802767f,0.632385f,0.557754f},{0.804394f,0.637151f,0.560094f},{0.806021f,0.641916f,0.562434f},{0.807640f,0.646603f,0.564751f},{0.809254f,0.651230f,0.567052f},{0.810868f,0.655857f,0.569353f},{0.812482f,0.660484f,0.571655f},{0.814089f,0.665044f,0.573936f},{0.815690f,0.669544f,0.576200f},{0.817290f,0.674043f,0.578464f},{0.818891f,0.678543f,0.580728f},{0.820486f,0.682986f,0.582975f},{0.822075f,0.687369f,0.585204f},{0.823663f,0.691751f,0.587434f},{0.825252f,0.696133f,0.589663f},{0.826835f,0.700469f,0.591878f},{0.828411f,0.704743f,0.594073f},{0.829987f,0.709017f,0.596269f},{0.831563f,0.713291f,0.598465f},{0.833135f,0.717526f,0.600648f},{0.834699f,0.721699f,0.602811f},{0.836263f,0.725872f,0.604975f},{0.837827f,0.730045f,0.607138f},{0.839387f,0.734187f,0.609292f},{0.840940f,0.738266f,0.611424f},{0.842492f,0.742345f,0.613557f},{0.844045f,0.746424f,0.615689f},{0.845594f,0.750478f,0.617814f},{0.847135f,0.754469f,0.619917f},{0.848676f,0.758460f,0.622021f},{0.850218f,0.762452f,0.624124f},{0.851756f,0.766423f,0.626221f},{0.853286f,0.770332f,0.628296f},{0.854816f,0.774240f,0.630371f},{0.856345f,0.778149f,0.632446f},{0.857873f,0.782042f,0.634516f},{0.859392f,0.785873f,0.636564f},{0.860910f,0.789704f,0.638612f},{0.862429f,0.793535f,0.640660f},{0.863946f,0.797355f,0.642705f},{0.865454f,0.801113f,0.644727f},{0.866962f,0.804871f,0.646749f},{0.868470f,0.808629f,0.648770f},{0.869977f,0.812380f,0.650790f},{0.871475f,0.816069f,0.652787f},{0.872973f,0.819758f,0.654783f},{0.874471f,0.823446f,0.656780f},{0.875968f,0.827132f,0.658776f},{0.877455f,0.830755f,0.660749f},{0.878942f,0.834378f,0.662721f},{0.880430f,0.838002f,0.664694f},{0.881917f,0.841625f,0.666667f},{0.883394f,0.845186f,0.668616f},{0.884871f,0.848747f,0.670565f},{0.886348f,0.852309f,0.672514f},{0.887826f,0.855870f,0.674463f},{0.889293f,0.859375f,0.676391f},{0.890761f,0.862878f,0.678318f},{0.892228f,0.866380f,0.680245f},{0.893695f,0.869882f,0.682171f},{0.895154f,0.873334f,0.684078f},{0.896611f,0.876780f,0.685984f},{0.898069f,0.880225f,0.687889f},{0.899527f,0.883671f,0.689794f},{0.900976f,0.887072f,0.691681f},{0.902425f,0.890464f,0.693564f},{0.903873f,0.893857f,0.695448f},{0.905321f,0.897250f,0.697332f},{0.906762f,0.900601f,0.699199f},{0.908201f,0.903942f,0.701063f},{0.909639f,0.907284f,0.702927f},{0.911078f,0.910625f,0.704790f},{0.912510f,0.912510f,0.709362f},{0.913940f,0.913940f,0.714781f},{0.915370f,0.915370f,0.720199f},{0.916799f,0.916799f,0.725618f},{0.918223f,0.918223f,0.730923f},{0.919643f,0.919643f,0.736182f},{0.921064f,0.921064f,0.741442f},{0.922484f,0.922484f,0.746701f},{0.923899f,0.923899f,0.751864f},{0.925311f,0.925311f,0.756979f},{0.926723f,0.926723f,0.762093f},{0.928135f,0.928135f,0.767207f},{0.929542f,0.929542f,0.772239f},{0.930945f,0.930945f,0.777219f},{0.932348f,0.932348f,0.782199f},{0.933752f,0.933752f,0.787179f},{0.935150f,0.935150f,0.792089f},{0.936545f,0.936545f,0.796945f},{0.937940f,0.937940f,0.801800f},{0.939335f,0.939335f,0.806656f},{0.940725f,0.940725f,0.811452f},{0.942112f,0.942112f,0.816193f},{0.943498f,0.943498f,0.820934f},{0.944885f,0.944885f,0.825675f},{0.946267f,0.946267f,0.830365f},{0.947646f,0.947646f,0.834999f},{0.949024f,0.949024f,0.839632f},{0.950402f,0.950402f,0.844265f},{0.951777f,0.951777f,0.848856f},{0.953147f,0.953147f,0.853389f},{0.954518f,0.954518f,0.857922f},{0.955888f,0.955888f,0.862455f},{0.957255f,0.957255f,0.866952f},{0.958617f,0.958617f,0.871391f},{0.959979f,0.959979f,0.875830f},{0.961342f,0.961342f,0.880269f},{0.962702f,0.962702f,0.884679f},{0.964056f,0.964056f,0.889029f},{0.965411f,0.965411f,0.893379f},{0.966765f,0.966765f,0.897730f},{0.968118f,0.968118f,0.902056f},{0.969465f,0.969465f,0.906323f},{0.970812f,0.970812f,0.910591f},{0.972159f,0.972159f,0.914858f},{0.973504f,0.973504f,0.919106f},{0.974843f,0.974843f,0.923294f},{0.976183f,0.976183f,0.927482f},{0.977523f,0.977523f,0.931671f},{0.978861f,0.978861f,0.935844f},{0.980193f,0.980193f,0.939958f},{0.981525f,0.981525f,0.944072f},{0.982857f,0.982857f,0.948185f},{0.984188f,0.984188f,0.952289f},{0.985513f,0.985513f,0.956331f},{0.986838f,0.986838f,0.960374f},{0.988162f,0.988162f,0.964417f},{0.989486f,0.989486f,0.968454f},{0.990804f,0.990804f,0.972429f},{0.992122f,0.992122f,0.976405f},{0.993440f,0.993440f,0.980381f},{0.994757f,0.994757f,0.984353f},{0.996068f,0.996068f,0.988265f},{0.997379f,0.997379f,0.992177f},{0.998689f,0.998689f,0.996088f},{1.000000f,1.000000f,1.000000f}}}},
  {"autumn", {{{1.000000f,0.000000f,0.000000f},{1.000000f,0.003922f,0.000000f},{1.000000f,0.007843f,0.000000f},{1.000000f,0.011765f,0.000000f},{1.000000f,0.015686f,0.000000f},{1.000000f,0.019608f,0.000000f},{1.000000f,0.023529f,0.000000f},{1.000000f,0.027451f,0.000000f},{1.000000f,0.031373f,0.000000f},{1.000000f,0.035294f,0.000000f},{1.000000f,0.039216f,0.000000f},{1.000000f,0.043137f,0.000000f},{1.000000f,0.047059f,0.000000f},{1.000000f,0.050980f,0.000000f},{1.000000f,0.054902f,0.000000f},{1.000000f,0.058824f,0.000000f},{1.000000f,0.062745f,0.000000f},{1.000000f,0.066667f,0.000000f},{1.000000f,0.070588f,0.000000f},{1.000000f,0.074510f,0.000000f},{1.000000f,0.078431f,0.000000f},{1.000000f,0.082353f,0.000000f},{1.000000f,0.086275f,0.000000f},{1.000000f,0.090196f,0.000000f},{1.000000f,0.094118f,0.000000f},{1.000000f,0.098039f,0.000000f},{1.000000f,0.101961f,0.000000f},{1.000000f,0.105882f,0.000000f},{1.000000f,0.109804f,0.000000f},{1.000000f,0.113725f,0.000000f},{1.000000f,0.117647f,0.000000f},{1.000000f,0.121569f,0.000000f},{1.000000f,0.125490f,0.000000f},{1.000000f,0.129412f,0.000000f},{1.000000f,0.133333f,0.000000f},{1.000000f,0.137255f,0.000000f},{1.000000f,0.141176f,0.000000f},{1.000000f,0.145098f,0.000000f},{1.000000f,0.149020f,0.000000f},{1.000000f,0.152941f,0.000000f},{1.000000f,0.156863f,0.000000f},{1.000000f,0.160784f,0.000000f},{1.000000f,0.164706f,0.000000f},{1.000000f,0.168627f,0.000000f},{1.000000f,0.172549f,0.000000f},{1.000000f,0.176471f,0.000000f},{1.000000f,0.180392f,0.000000f},{1.000000f,0.184314f,0.000000f},{1.000000f,0.188235f,0.000000f},{1.000000f,0.192157f,0.000000f},{1.000000f,0.196078f,0.000000f},{1.000000f,0.200000f,0.000000f},{1.000000f,0.203922f,0.000000f},{1.000000f,0.207843f,0.000000f},{1.000000f,0.211765f,0.000000f},{1.000000f,0.215686f,0.000000f},{1.000000f,0.219608f,0.000000f},{1.000000f,0.223529f,0.000000f},{1.000000f,0.227451f,0.000000f},{1.000000f,0.231373f,0.000000f},{1.000000f,0.235294f,0.000000f},{1.000000f,0.239216f,0.000000f},{1.000000f,0.243137f,0.000000f},{1.000000f,0.247059f,0.000000f},{1.000000f,0.250980f,0.000000f},{1.000000f,0.254902f,0.000000f},{1.000000f,0.258824f,0.000000f},{1.000000f,0.262745f,0.000000f},{1.000000f,0.266667f,0.000000f},{1.000000f,0.270588f,0.000000f},{1.000000f,0.274510f,0.000000f},{1.000000f,0.278431f,0.000000f},{1.000000f,0.282353f,0.000000f},{1.000000f,0.286275f,0.000000f},{1.000000f,0.290196f,0.000000f},{1.000000f,0.294118f,0.000000f},{1.000000f,0.298039f,0.000000f},{1.000000f,0.301961f,0.000000f},{1.000000f,0.305882f,0.000000f},{1.000000f,0.309804f,0.000000f},{1.000000f,0.313725f,0.000000f},{1.000000f,0.317647f,0.000000f},{1.000000f,0.321569f,0.000000f},{1.000000f,0.325490f,0.000000f},{1.000000f,0.329412f,0.000000f},{1.000000f,0.333333f,0.000000f},{1.000000f,0.337255f,0.000000f},{1.000000f,0.341176f,0.000000f},{1.000000f,0.345098f,0.000000f},{1.000000f,0.349020f,0.000000f},{1.000000f,0.352941f,0.000000f},{1.000000f,0.356863f,0.000000f},{1.000000f,0.360784f,0.000000f},{1.000000f,0.364706f,0.000000f},{1.000000f,0.368627f,0.000000f},{1.000000f,0.372549f,0.000000f},{1.000000f,0.376471f,0.000000f},{1.000000f,0.380392f,0.000000f},{1.000000f,0.384314f,0.000000f},{1.000000f,0.388235f,0.000000f},{1.000000f,0.392157f,0.000000f},{1.000000f,0.396078f,0.000000f},{1.000000f,0.400000f,0.000000f},{1.000000f,0.403922f,0.000000f},{1.000000f,0.407843f,0.000000f},{1.000000f,0.411765f,0.000000f},{1.000000f,0.415686f,0.000000f},{1.000000f,0.419608f,0.000000f},{1.000000f,0.423529f,0.000000f},{1.000000f,0.427451f,0.000000f},{1.000000f,0.431373f,0.000000f},{1.000000f,0.435294f,0.000000f},{1.000000f,0.439216f,0.000000f},{1.000000f,0.443137f,0.000000f},{1.000000f,0.447059f,0.000000f},{1.000000f,0.450980f,0.000000f},{1.000000f,0.454902f,0.000000f},{1.000000f,0.458824f,0.000000f},{1.000000f,0.462745f,0.000000f},{1.000000f,0.466667f,0.000000f},{1.000000f,0.470588f,0.000000f},{1.000000f,0.474510f,0.000000f},{1.000000f,0.478431f,0.000000f},{1.000000f,0.482353f,0.000000f},{1.000000f,0.486275f,0.000000f},{1.000000f,0.490196f,0.000000f},{1.000000f,0.494118f,0.000000f},{1.000000f,0.498039f,0.000000f},{1.000000f,0.501961f,0.000000f},{1.000000f,0.505882f,0.000000f},{1.000000f,0.509804f,0.000000f},{1.000000f,0.513725f,0.000000f},{1.000000f,0.517647f,0.000000f},{1.000000f,0.521569f,0.000000f},{1.000000f,0.525490f,0.000000f},{1.000000f,0.529412f,0.000000f},{1.000000f,0.533333f,0.000000f},{1.000000f,0.537255f,0.000000f},{1.000000f,0.541176f,0.000000f},{1.000000f,0.545098f,0.000000f},{1.000000f,0.549020f,0.000000f},{1.000000f,0.552941f,0.000000f},{1.000000f,0.556863f,0.000000f},{1.000000f,0.560784f,0.000000f},{1.000000f,0.564706f,0.000000f},{1.000000f,0.568627f,0.000000f},{1.000000f,0.572549f,0.000000f},{1.000000f,0.576471f,0.000000f},{1.000000f,0.580392f,0.000000f},{1.000000f,0.584314f,0.000000f},{1.000000f,0.588235f,0.000000f},{1.000000f,0.592157f,0.000000f},{1.000000f,0.596078f,0.000000f},{1.000000f,0.600000f,0.000000f},{1.000000f,0.603922f,0.000000f},{1.000000f,0.607843f,0.000000f},{1.000000f,0.611765f,0.000000f},{1.000000f,0.615686f,0.000000f},{1.000000f,0.619608f,0.000000f},{1.000000f,0.623529f,0.000000f},{1.000000f,0.627451f,0.000000f},{1.000000f,0.631373f,0.000000f},{1.000000f,0.635294f,0.000000f},{1.000000f,0.639216f,0.000000f},{1.000000f,0.643137f,0.000000f},{1.000000f,0.647059f,0.000000f},{1.000000f,0.650980f,0.000000f},{1.000000f,0.654902f,0.000000f},{1.000000f,0.658824f,0.000000f},{1.000000f,0.662745f,0.000000f},{1.000000f,0.666667f,0.000000f},{1.000000f,0.670588f,0.000000f},{1.000000f,0.674510f,0.000000f},{1.000000f,0.678431f,0.000000f},{1.000000f,0.682353f,0.000000f},{1.000000f,0.686275f,0.000000f},{1.000000f,0.690196f,0.000000f},{1.000000f,0.694118f,0.000000f},{1.000000f,0.698039f,0.000000f},{1.000000f,0.701961f,0.000000f},{1.000000f,0.705882f,0.000000f},{1.000000f,0.709804f,0.000000f},{1.000000f,0.713725f,0.000000f},{1.000000f,0.717647f,0.000000f},{1.000000f,0.721569f,0.000000f},{1.000000f,0.725490f,0.000000f},{1.000000f,0.729412f,0.000000f},{1.000000f,0.733333f,0.000000f},{1.000000f,0.737255f,0.000000f},{1.000000f,0.741176f,0.000000f},{1.000000f,0.745098f,0.000000f},{1.000000f,0.749020f,0.000000f},{1.000000f,0.752941f,0.000000f},{1.000000f,0.756863f,0.000000f},{1.000000f,0.760784f,0.000000f},{1.000000f,0.764706f,0.000000f},{1.000000f,0.768627f,0.000000f},{1.000000f,0.772549f,0.000000f},{1.000000f,0.776471f,0.000000f},{1.000000f,0.780392f,0.000000f},{1.000000f,0.784314f,0.000000f},{1.000000f,0.788235f,0.000000f},{1.000000f,0.792157f,0.000000f},{1.000000f,0.796078f,0.000000f},{1.000000f,0.800000f,0.000000f},{1.000000f,0.803922f,0.000000f},{1.000000f,0.807843f,0.000000f},{1.000000f,0.811765f,0.000000f},{1.000000f,0.815686f,0.000000f},{1.000000f,0.819608f,0.000000f},{1.000000f,0.823529f,0.000000f},{1.000000f,0.827451f,0.000000f},{1.000000f,0.831373f,0.000000f},{1.000000f,0.835294f,0.000000f},{1.000000f,0.839216f,0.000000f},{1.000000f,0.843137f,0.000000f},{1.000000f,0.847059f,0.000000f},{1.000000f,0.850980f,0.000000f},{1.000000f,0.854902f,0.000000f},{1.000000f,0.858824f,0.000000f},{1.000000f,0.862745f,0.000000f},{1.000000f,0.866667f,0.000000f},{1.000000f,0.870588f,0.000000f},{1.000000f,0.874510f,0.000000f},{1.000000f,0.878431f,0.000000f},{1.000000f,0.882353f,0.000000f},{1.000000f,0.886275f,0.000000f},{1.000000f,0.890196f,0.000000f},{1.000000f,0.894118f,0.000000f},{1.000000f,0.898039f,0.000000f},{1.000000f,0.901961f,0.000000f},{1.000000f,0.905882f,0.000000f},{1.000000f,0.909804f,0.000000f},{1.000000f,0.913725f,0.000000f},{1.000000f,0.917647f,0.000000f},{1.000000f,0.921569f,0.000000f},{1.000000f,0.925490f,0.000000f},{1.000000f,0.929412f,0.000000f},{1.000000f,0.933333f,0.000000f},{1.000000f,0.937255f,0.000000f},{1.000000f,0.941176f,0.000000f},{1.000000f,0.945098f,0.000000f},{1.000000f,0.949020f,0.000000f},{1.000000f,0.952941f,0.000000f},{1.000000f,0.956863f,0.000000f},{1.000000f,0.960784f,0.000000f},{1.000000f,0.964706f,0.000000f},{1.000000f,0.968627f,0.000000f},{1.000000f,0.972549f,0.000000f},{1.000000f,0.976471f,0.000000f},{1.000000f,0.980392f,0.000000f},{1.000000f,0.984314f,0.000000f},{1.000000f,0.988235f,0.000000f},{1.000000f,0.992157f,0.000000f},{1.000000f,0.996078f,0.000000f},{1.000000f,1.000000f,0.000000f}}}},
  {"winter", {{{0.000000f,0.000000f,1.000000f},{0.000000f,0.003922f,0.998039f},{0.000000f,0.007843f,0.996078f},{0.000000f,0.011765f,0.994118f},{0.000000f,0.015686f,0.992157f},{0.000000f,0.019608f,0.990196f},{0.000000f,0.023529f,0.988235f},{0.000000f,0.027451f,0.986275f},{0.000000f,0.031373f,0.984314f},{0.000000f,0.035294f,0.982353f},{0.000000f,0.039216f,0.980392f},{0.000000f,0.043137f,0.978431f},{0.000000f,0.047059f,0.976471f},{0.000000f,0.050980f,0.974510f},{0.000000f,0.054902f,0.972549f},{0.000000f,0.058824f,0.970588f},{0.000000f,0.062745f,0.968627f},{0.000000f,0.066667f,0.966667f},{0.000000f,0.070588f,0.964706f},{0.000000f,0.074510f,0.962745f},{0.000000f,0.078431f,0.960784f},{0.000000f,0.082353f,0.958824f},{0.000000f,0.086275f,0.956863f},{0.000000f,0.090196f,0.954902f},{0.000000f,0.094118f,0.952941f},{0.000000f,0.098039f,0.950980f},{0.000000f,0.101961f,0.949020f},{0.000000f,0.105882f,0.947059f},{0.000000f,0.109804f,0.945098f},{0.000000f,0.113725f,0.943137f},{0.000000f,0.117647f,0.941176f},{0.000000f,0.121569f,0.939216f},{0.000000f,0.125490f,0.937255f},{0.000000f,0.129412f,0.935294f},{0.000000f,0.133333f,0.933333f},{0.000000f,0.137255f,0.931373f},{0.000000f,0.141176f,0.929412f},{0.000000f,0.145098f,0.927451f},{0.000000f,0.149020f,0.925490f},{0.000000f,0.152941f,0.923529f},{0.000000f,0.156863f,0.921569f},{0.000000f,0.160784f,0.919608f},{0.000000f,0.164706f,0.917647f},{0.000000f,0.168627f,0.915686f},{0.000000f,0.172549f,0.913725f},{0.000000f,0.176471f,0.911765f},{0.000000f,0.180392f,0.909804f},{0.000000f,0.184314f,0.907843f},{0.000000f,0.188235f,0.905882f},{0.000000f,0.192157f,0.903922f},{0.000000f,0.196078f,0.901961f},{0.000000f,0.200000f,0.900000f},{0.000000f,0.203922f,0.898039f},{0.000000f,0.207843f,0.896078f},{0.000000f,0.211765f,0.894118f},{0.000000f,0.215686f,0.892157f},{0.000000f,0.219608f,0.890196f},{0.000000f,0.223529f,0.888235f},{0.000000f,0.227451f,0.886275f},{0.000000f,0.231373f,0.884314f},{0.000000f,0.235294f,0.882353f},{0.000000f,0.239216f,0.880392f},{0.000000f,0.243137f,0.878431f},{0.000000f,0.247059f,0.876471f},{0.000000f,0.250980f,0.874510f},{0.000000f,0.254902f,0.872549f},{0.000000f,0.258824f,0.870588f},{0.000000f,0.262745f,0.868627f},{0.000000f,0.266667f,0.866667f},{0.000000f,0.270588f,0.864706f},{0.000000f,0.274510f,0.862745f},{0.000000f,0.278431f,0.860784f},{0.000000f,0.282353f,0.858824f},{0.000000f,0.286275f,0.856863f},{0.000000f,0.290196f,0.854902f},{0.000000f,0.294118f,0.852941f},{0.000000f,0.298039f,0.850980f},{0.000000f,0.301961f,0.849020f},{0.000000f,0.305882f,0.847059f},{0.000000f,0.309804f,0.845098f},{0.000000f,0.313725f,0.843137f},{0.000000f,0.317647f,0.841176f},{0.000000f,0.321569f,0.839216f},{0.000000f,0.325490f,0.837255f},{0.000000f,0.329412f,0.835294f},{0.000000f,0.333333f,0.833333f},{0.000000f,0.337255f,0.831373f},{0.000000f,0.341176f,0.829412f},{0.000000f,0.345098f,0.827451f},{0.000000f,0.349020f,0.825490f},{0.000000f,0.352941f,0.823529f},{0.000000f,0.356863f,0.821569f},{0.000000f,0.360784f,0.819608f},{0.000000f,0.364706f,0.817647f},{0.000000f,0.368627f,0.815686f},{0.000000f,0.372549f,0.813725f},{0.000000f,0.376471f,0.811765f},{0.000000f,0.380392f,0.809804f},{0.000000f,0.384314f,0.807843f},{0.000000f,0.388235f,0.805882f},{0.000000f,0.392157f,0.803922f},{0.000000f,0.396078f,0.801961f},{0.000000f,0.400000f,0.800000f},{0.000000f,0.403922f,0.798039f},{0.000000f,0.407843f,0.796078f},{0.000000f,0.411765f,0.794118f},{0.000000f,0.415686f,0.792157f},{0.000000f,0.419608f,0.790196f},{0.000000f,0.423529f,0.788235f},{0.000000f,0.427451f,0.786275f},{0.000000f,0.431373f,0.784314f},{0.000000f,0.435294f,0.782353f},{0.000000f,0.439216f,0.780392f},{0.000000f,0.443137f,0.778431f},{0.000000f,0.447059f,0.776471f},{0.000000f,0.450980f,0.774510f},{0.000000f,0.454902f,0.772549f},{0.000000f,0.458824f,0.770588f},{0.000000f,0.462745f,0.768627f},{0.000000f,0.466667f,0.766667f},{0.000000f,0.470588f,0.764706f},{0.000000f,0.474510f,0.762745f},{0.000000f,0.478431f,0.760784f},{0.000000f,0.482353f,0.758824f},{0.000000f,0.486275f,0.756863f},{0.000000f,0.490196f,0.754902f},{0.000000f,0.494118f,0.752941f},{0.000000f,0.498039f,0.750980f},{0.000000f,0.501961f,0.749020f},{0.000000f,0.505882f,0.747059f},{0.000000f,0.509804f,0.745098f},{0.000000f,0.513725f,0.743137f},{0.000000f,0.517647f,0.741176f},{0.000000f,0.521569f,0.739216f},{0.000000f,0.525490f,0.737255f},{0.000000f,0.529412f,0.735294f},{0.000000f,0.533333f,0.733333f},{0.000000f,0.537255f,0.731373f},{0.000000f,0.541176f,0.729412f},{0.000000f,0.545098f,0.727451f},{0.000000f,0.549020f,0.725490f},{0.000000f,0.552941f,0.723529f},{0.000000f,0.556863f,0.721569f},{0.000000f,0.560784f,0.719608f},{0.000000f,0.564706f,0.717647f},{0.000000f,0.568627f,0.715686f},{0.000000f,0.572549f,0.713725f},{0.000000f,0.576471f,0.711765f},{0.000000f,0.580392f,0.709804f},{0.000000f,0.584314f,0.707843f},{0.000000f,0.588235f,0.705882f},{0.000000f,0.592157f,0.703922f},{0.000000f,0.596078f,0.701961f},{0.000000f,0.600000f,0.700000f},{0.000000f,0.603922f,0.698039f},{0.000000f,0.607843f,0.696078f},{0.000000f,0.611765f,0.694118f},{0.000000f,0.615686f,0.692157f},{0.000000f,0.619608f,0.690196f},{0.000000f,0.623529f,0.688235f},{0.000000f,0.627451f,0.686275f},{0.000000f,0.631373f,0.684314f},{0.000000f,0.635294f,0.682353f},{0.000000f,0.639216f,0.680392f},{0.000000f,0.643137f,0.678431f},{0.000000f,0.647059f,0.676471f},{0.000000f,0.650980f,0.674510f},{0.000000f,0.654902f,0.672549f},{0.000000f,0.658824f,0.670588f},{0.000000f,0.662745f,0.668627f},{0.000000f,0.666667f,0.666667f},{0.000000f,0.670588f,0.664706f},{0.000000f,0.674510f,0.662745f},{0.000000f,0.678431f,0.660784f},{0.000000f,0.682353f,0.658824f},{0.000000f,0.686275f,0.656863f},{0.000000f,0.690196f,0.654902f},{0.000000f,0.694118f,0.652941f},{0.000000f,0.698039f,0.650980f},{0.000000f,0.701961f,0.649020f},{0.000000f,0.705882f,0.647059f},{0.000000f,0.709804f,0.645098f},{0.000000f,0.713725f,0.643137f},{0.000000f,0.717647f,0.641176f},{0.000000f,0.721569f,0.639216f},{0.000000f,0.725490f,0.637255f},{0.000000f,0.729412f,0.635294f},{0.000000f,0.733333f,0.633333f},{0.000000f,0.737255f,0.631373f},{0.000000f,0.741176f,0.629412f},{0.000000f,0.745098f,0.627451f},{0.000000f,0.749020f,0.625490f},{0.000000f,0.752941f,0.623529f},{0.000000f,0.756863f,0.621569f},{0.000000f,0.760784f,0.619608f},{0.000000f,0.764706f,0.617647f},{0.000000f,0.768627f,0.615686f},{0.000000f,0.772549f,0.613725f},{0.000000f,0.776471f,0.611765f},{0.000000f,0.780392f,0.609804f},{0.000000f,0.784314f,0.607843f},{0.000000f,0.788235f,0.605882f},{0.000000f,0.792157f,0.603922f},{0.000000f,0.796078f,0.601961f},{0.000000f,0.800000f,0.600000f},{0.000000f,0.803922f,0.598039f},{0.000000f,0.807843f,0.596078f},{0.000000f,0.811765f,0.594118f},{0.000000f,0.815686f,0.592157f},{0.000000f,0.819608f,0.590196f},{0.000000f,0.823529f,0.588235f},{0.000000f,0.827451f,0.586275f},{0.000000f,0.831373f,0.584314f},{0.000000f,0.835294f,0.582353f},{0.000000f,0.839216f,0.580392f},{0.000000f,0.843137f,0.578431f},{0.000000f,0.847059f,0.576471f},{0.000000f,0.850980f,0.574510f},{0.000000f,0.854902f,0.572549f},{0.000000f,0.858824f,0.570588f},{0.000000f,0.862745f,0.568627f},{0.000000f,0.866667f,0.566667f},{0.000000f,0.870588f,0.564706f},{0.000000f,0.874510f,0.562745f},{0.000000f,0.878431f,0.560784f},{0.000000f,0.882353f,0.558824f},{0.000000f,0.886275f,0.556863f},{0.000000f,0.890196f,0.554902f},{0.000000f,0.894118f,0.552941f},{0.000000f,0.898039f,0.550980f},{0.000000f,0.901961f,0.549020f},{0.000000f,0.905882f,0.547059f},{0.000000f,0.909804f,0.545098f},{0.000000f,0.913725f,0.543137f},{0.000000f,0.917647f,0.541176f},{0.000000f,0.921569f,0.539216f},{0.000000f,0.925490f,0.537255f},{0.000000f,0.929412f,0.535294f},{0.000000f,0.933333f,0.533333f},{0.000000f,0.937255f,0.531373f},{0.000000f,0.941176f,0.529412f},{0.000000f,0.945098f,0.527451f},{0.000000f,0.949020f,0.525490f},{0.000000f,0.952941f,0.523529f},{0.000000f,0.956863f,0.521569f},{0.000000f,0.960784f,0.519608f},{0.000000f,0.964706f,0.517647f},{0.000000f,0.968627f,0.515686f},{0.000000f,0.972549f,0.513725f},{0.000000f,0.976471f,0.511765f},{0.000000f,0.980392f,0.509804f},{0.000000f,0.984314f,0.507843f},{0.000000f,0.988235f,0.505882f},{0.000000f,0.992157f,0.503922f},{0.000000f,0.996078f,0.501961f},{0.000000f,1.000000f,0.500000f}}}},
  {"spring", {{{1.000000f,0.000000f,1.000000f},{1.000000f,0.003922f,0.996078f},{1.000000f,0.007843f,0.992157f},{1.000000f,0.011765f,0.988235f},{1.000000f,0.015686f,0.984314f},{1.000000f,0.019608f,0.980392f},{1.000000f,0.023529f,0.976471f},{1.000000f,0.027451f,0.972549f},{1.000000f,0.031373f,0.968627f},{1.000000f,0.035294f,0.964706f},{1.000000f,0.039216f,0.960784f},{1.000000f,0.043137f,0.956863f},{1.000000f,0.047059f,0.952941f},{1.000000f,0.050980f,0.949020f},{1.000000f,0.054902f,0.945098f},{1.000000f,0.058824f,0.941176f},{1.000000f,0.062745f,0.937255f},{1.000000f,0.066667f,0.933333f},{1.000000f,0.070588f,0.929412f},{1.000000f,0.074510f,0.925490f},{1.000000f,0.078431f,0.921569f},{1.000000f,0.082353f,0.917647f},{1.000000f,0.086275f,0.913725f},{1.000000f,0.090196f,0.909804f},{1.000000f,0.094118f,0.905882f},{1.000000f,0.098039f,0.901961f},{1.000000f,0.101961f,0.898039f},{1.000000f,0.105882f,0.894118f},{1.000000f,0.109804f,0.890196f},{1.000000f,0.113725f,0.886275f},{1.000000f,0.117647f,0.882353f},{1.000000f,0.121569f,0.878431f},{1.000000f,0.125490f,0.874510f},{1.000000f,0.129412f,0.870588f},{1.000000f,0.133333f,0.866667f},{1.000000f,0.137255f,0.862745f},{1.000000f,0.141176f,0.858824f},{1.000000f,0.145098f,0.854902f},{1.000000f,0.149020f,0.850980f},{1.000000f,0.152941f,0.847059f},{1.000000f,0.156863f,0.843137f},{1.000000f,0.160784f,0.839216f},{1.000000f,0.164706f,0.835294f},{1.000000f,0.168627f,0.831373f},{1.000000f,0.172549f,0.827451f},{1.000000f,0.176471f,0.823529f},{1.000000f,0.180392f,0.819608f},{1.000000f,0.184314f,0.815686f},{1.000000f,0.188235f,0.811765f},{1.000000f,0.192157f,0.807843f},{1.000000f,0.196078f,0.803922f},{1.000000f,0.200000f,0.800000f},{1.000000f,0.203922f,0.796078f},{1.000000f,0.207843f,0.792157f},{1.000000f,0.211765f,0.788235f},{1.000000f,0.215686f,0.784314f},{1.000000f,0.219608f,0.780392f},{1.000000f,0.223529f,0.776471f},{1.000000f,0.227451f,0.772549f},{1.000000f,0.231373f,0.768627f},{1.000000f,0.235294f,0.764706f},{1.000000f,0.239216f,0.760784f},{1.000000f,0.243137f,0.756863f},{1.000000f,0.247059f,0.752941f},{1.000000f,0.250980f,0.749020f},{1.000000f,0.254902f,0.745098f},{1.000000f,0.258824f,0.741176f},{1.000000f,0.262745f,0.737255f},{1.000000f,0.266667f,0.733333f},{1.000000f,0.270588f,0.729412f},{1.000000f,0.274510f,0.725490f},{1.000000f,0.278431f,0.721569f},{1.000000f,0.282353f,0.717647f},{1.000000f,0.286275f,0.713725f},{1.000000f,0.290196f,0.709804f},{1.000000f,0.294118f,0.705882f},{1.000000f,0.298039f,0.701961f},{1.000000f,0.301961f,0.698039f},{1.000000f,0.305882f,0.694118f},{1.000000f,0.309804f,0.690196f},{1.000000f,0.313725f,0.686275f},{1.000000f,0.317647f,0.682353f},{1.000000f,0.321569f,0.678431f},{1.000000f,0.325490f,0.674510f},{1.000000f,0.329412f,0.670588f},{1.000000f,0.333333f,0.666667f},{1.000000f,0.337255f,0.662745f},{1.000000f,0.341176f,0.658824f},{1.000000f,0.345098f,0.654902f},{1.000000f,0.349020f,0.650980f},{1.000000f,0.352941f,0.647059f},{1.000000f,0.356863f,0.643137f},{1.000000f,0.360784f,0.639216f},{1.000000f,0.364706f,0.635294f},{1.000000f,0.368627f,0.631373f},{1.000000f,0.372549f,0.627451f},{1.000000f,0.376471f,0.623529f},{1.000000f,0.380392f,0.619608f},{1.000000f,0.384314f,0.615686f},{1.000000f,0.388235f,0.611765f},{1.000000f,0.392157f,0.607843f},{1.000000f,0.396078f,0.603922f},{1.000000f,0.400000f,0.600000f},{1.000000f,0.403922f,0.596078f},{1.000000f,0.407843f,0.592157f},{1.000000f,0.411765f,0.588235f},{1.000000f,0.415686f,0.584314f},{1.000000f,0.419608f,0.580392f},{1.000000f,0.423529f,0.576471f},{1.000000f,0.427451f,0.572549f},{1.000000f,0.431373f,0.568627f},{1.000000f,0.435294f,0.564706f},{1.000000f,0.439216f,0.560784f},{1.000000f,0.443137f,0.556863f},{1.000000f,0.447059f,0.552941f},{1.000000f,0.450980f,0.549020f},{1.000000f,0.454902f,0.545098f},{1.000000f,0.458824f,0.541176f},{1.000000f,0.462745f,0.537255f},{1.000000f,0.466667f,0.533333f},{1.000000f,0.470588f,0.529412f},{1.000000f,0.474510f,0.525490f},{1.000000f,0.478431f,0.521569f},{1.000000f,0.482353f,0.517647f},{1.000000f,0.486275f,0.513725f},{1.000000f,0.490196f,0.509804f},{1.000000f,0.494118f,0.505882f},{1.000000f,0.498039f,0.501961f},{1.000000f,0.501961f,0.498039f},{1.000000f,0.505882f,0.494118f},{1.000000f,0.509804f,0.490196f},{1.000000f,0.513725f,0.486275f},{1.000000f,0.517647f,0.482353f},{1.000000f,0.521569f,0.478431f},{1.000000f,0.525490f,0.474510f},{1.000000f,0.529412f,0.470588f},{1.000000f,0.533333f,0.466667f},{1.000000f,0.537255f,0.462745f},{1.000000f,0.541176f,0.458824f},{1.000000f,0.545098f,0.454902f},{1.000000f,0.549020f,0.450980f},{1.000000f,0.552941f,0.447059f},{1.000000f,0.556863f,0.443137f},{1.000000f,0.560784f,0.439216f},{1.000000f,0.564706f,0.435294f},{1.000000f,0.568627f,0.431373f},{1.000000f,0.572549f,0.427451f},{1.000000f,0.576471f,0.423529f},{1.000000f,0.580392f,0.419608f},{1.000000f,0.584314f,0.415686f},{1.000000f,0.588235f,0.411765f},{1.000000f,0.592157f,0.407843f},{1.000000f,0.596078f,0.403922f},{1.000000f,0.600000f,0.400000f},{1.000000f,0.603922f,0.396078f},{1.000000f,0.607843f,0.392157f},{1.000000f,0.611765f,0.388235f},{1.000000f,0.615686f,0.384314f},{1.000000f,0.619608f,0.380392f},{1.000000f,0.623529f,0.376471f},{1.000000f,0.627451f,0.372549f},{1.000000f,0.631373f,0.368627f},{1.000000f,0.635294f,0.364706f},{1.000000f,0.639216f,0.360784f},{1.000000f,0.643137f,0.356863f},{1.000000f,0.647059f,0.352941f},{1.000000f,0.650980f,0.349020f},{1.000000f,0.654902f,0.345098f},{1.000000f,0.658824f,0.341176f},{1.000000f,0.662745f,0.337255f},{1.000000f,0.666667f,0.333333f},{1.000000f,0.670588f,0.329412f},{1.000000f,0.674510f,0.325490f},{1.000000f,0.678431f,0.321569f},{1.000000f,0.682353f,0.317647f},{1.000000f,0.686275f,0.313725f},{1.000000f,0.690196f,0.309804f},{1.000000f,0.694118f,0.305882f},{1.000000f,0.698039f,0.301961f},{1.000000f,0.701961f,0.298039f},{1.000000f,0.705882f,0.294118f},{1.000000f,0.709804f,0.290196f},{1.000000f,0.713725f,0.286275f},{1.000000f,0.717647f,0.282353f},{1.000000f,0.721569f,0.278431f},{1.000000f,0.725490f,0.274510f},{1.000000f,0.729412f,0.270588f},{1.000000f,0.733333f,0.266667f},{1.000000f,0.737255f,0.262745f},{1.000000f,0.741176f,0.258824f},{1.000000f,0.745098f,0.254902f},{1.000000f,0.749020f,0.250980f},{1.000000f,0.752941f,0.247059f},{1.000000f,0.756863f,0.243137f},{1.000000f,0.760784f,0.239216f},{1.000000f,0.764706f,0.235294f},{1.000000f,0.768627f,0.231373f},{1.000000f,0.772549f,0.227451f},{1.000000f,0.776471f,0.223529f},{1.000000f,0.780392f,0.219608f},{1.000000f,0.784314f,0.215686f},{1.000000f,0.788235f,0.211765f},{1.000000f,0.792157f,0.207843f},{1.000000f,0.796078f,0.203922f},{1.000000f,0.800000f,0.200000f},{1.000000f,0.803922f,0.196078f},{1.000000f,0.807843f,0.192157f},{1.000000f,0.811765f,0.188235f},{1.000000f,0.815686f,0.184314f},{1.000000f,0.819608f,0.180392f},{1.000000f,0.823529f,0.176471f},{1.000000f,0.827451f,0.172549f},{1.000000f,0.831373f,0.168627f},{1.000000f,0.835294f,0.164706f},{1.000000f,0.839216f,0.160784f},{1.000000f,0.843137f,0.156863f},{1.000000f,0.847059f,0.152941f},{1.000000f,0.850980f,0.149020f},{1.000000f,0.854902f,0.145098f},{1.000000f,0.858824f,0.141176f},{1.000000f,0.862745f,0.137255f},{1.000000f,0.866667f,0.133333f},{1.000000f,0.870588f,0.129412f},{1.000000f,0.874510f,0.125490f},{1.000000f,0.878431f,0.121569f},{1.000000f,0.882353f,0.117647f},{1.000000f,0.886275f,0.113725f},{1.000000f,0.890196f,0.109804f},{1.000000f,0.894118f,0.105882f},{1.000000f,0.898039f,0.101961f},{1.000000f,0.901961f,0.098039f},{1.000000f,0.905882f,0.094118f},{1.000000f,0.909804f,0.090196f},{1.000000f,0.913725f,0.086275f},{1.000000f,0.917647f,0.082353f},{1.000000f,0.921569f,0.078431f},{1.000000f,0.925490f,0.074510f},{1.000000f,0.929412f,0.070588f},{1.000000f,0.933333f,0.066667f},{1.000000f,0.937255f,0.062745f},{1.000000f,0.941176f,0.058824f},{1.000000f,0.945098f,0.054902f},{1.000000f,0.949020f,0.050980f},{1.000000f,0.952941f,0.047059f},{1.000000f,0.956863f,0.043137f},{1.000000f,0.960784f,0.039216f},{1.000000f,0.964706f,0.035294f},{1.000000f,0.968627f,0.031373f},{1.000000f,0.972549f,0.027451f},{1.000000f,0.976471f,0.023529f},{1.000000f,0.980392f,0.019608f},{1.000000f,0.984314f,0.015686f},{1.000000f,0.988235f,0.011765f},{1.000000f,0.992157f,0.007843f},{1.000000f,0.996078f,0.003922f},{1.000000f,1.000000f,0.000000f}}}},
  {"ocean", {{{0.000000f,0.500000f,0.000000f},{0.000000f,0.494118f,0.003922f},{0.000000f,0.488235f,0.007843f},{0.000000f,0.482353f,0.011765f},{0.000000f,0.476471f,0.015686f},{0.000000f,0.470588f,0.019608f},{0.000000f,0.464706f,0.023529f},{0.000000f,0.458824f,0.027451f},{0.000000f,0.452941f,0.031373f},{0.000000f,0.447059f,0.035294f},{0.000000f,0.441176f,0.039216f},{0.000000f,0.435294f,0.043137f},{0.000000f,0.429412f,0.047059f},{0.000000f,0.423529f,0.050980f},{0.000000f,0.417647f,0.054902f},{0.000000f,0.411765f,0.058824f},{0.000000f,0.405882f,0.062745f},{0.000000f,0.400000f,0.066667f},{0.000000f,0.394118f,0.070588f},{0.000000f,0.388235f,0.074510f},{0.000000f,0.382353f,0.078431f},{0.000000f,0.376471f,0.082353f},{0.000000f,0.370588f,0.086275f},{0.000000f,0.364706f,0.090196f},{0.000000f,0.358824f,0.094118f},{0.000000f,0.352941f,0.098039f},{0.000000f,0.347059f,0.101961f},{0.000000f,0.341176f,0.105882f},{0.000000f,0.335294f,0.109804f},{0.000000f,0.329412f,0.113725f},{0.000000f,0.323529f,0.117647f},{0.000000f,0.317647f,0.121569f},{0.000000f,0.311765f,0.125490f},{0.000000f,0.305882f,0.129412f},{0.000000f,0.300000f,0.133333f},{0.000000f,0.294118f,0.137255f},{0.000000f,0.288235f,0.141176f},{0.000000f,0.282353f,0.145098f},{0.000000f,0.276471f,0.149020f},{0.000000f,0.270588f,0.152941f},{0.000000f,0.264706f,0.156863f},{0.000000f,0.258824f,0.160784f},{0.000000f,0.252941f,0.164706f},{0.000000f,0.247059f,0.168627f},{0.000000f,0.241176f,0.172549f},{0.000000f,0.235294f,0.176471f},{0.000000f,0.229412f,0.180392f},{0.000000f,0.223529f,0.184314f},{0.000000f,0.217647f,0.188235f},{0.000000f,0.211765f,0.192157f},{0.000000f,0.205882f,0.196078f},{0.000000f,0.200000f,0.200000f},{0.000000f,0.194118f,0.203922f},{0.000000f,0.188235f,0.207843f},{0.000000f,0.182353f,0.211765f},{0.000000f,0.176471f,0.215686f},{0.000000f,0.170588f,0.219608f},{0.000000f,0.164706f,0.223529f},{0.000000f,0.158824f,0.227451f},{0.000000f,0.152941f,0.231373f},{0.000000f,0.147059f,0.235294f},{0.000000f,0.141176f,0.239216f},{0.000000f,0.135294f,0.243137f},{0.000000f,0.129412f,0.247059f},{0.000000f,0.123529f,0.250980f},{0.000000f,0.117647f,0.254902f},{0.000000f,0.111765f,0.258824f},{0.000000f,0.105882f,0.262745f},{0.000000f,0.100000f,0.266667f},{0.000000f,0.094118f,0.270588f},{0.000000f,0.088235f,0.274510f},{0.000000f,0.082353f,0.278431f},{0.000000f,0.076471f,0.282353f},{0.000000f,0.070588f,0.286275f},{0.000000f,0.064706f,0.290196f},{0.000000f,0.058824f,0.294118f},{0.000000f,0.052941f,0.298039f},{0.000000f,0.047059f,0.301961f},{0.000000f,0.041176f,0.305882f},{0.000000f,0.035294f,0.309804f},{0.000000f,0.029412f,0.313725f},{0.000000f,0.023529f,0.317647f},{0.000000f,0.017647f,0.321569f},{0.000000f,0.011765f,0.325490f},{0.000000f,0.005882f,0.329412f},{0.000000f,0.000000f,0.333333f},{0.000000f,0.005882f,0.337255f},{0.000000f,0.011765f,0.341176f},{0.000000f,0.017647f,0.345098f},{0.000000f,0.023529f,0.349020f},{0.000000f,0.029412f,0.352941f},{0.000000f,0.035294f,0.356863f},{0.000000f,0.041176f,0.360784f},{0.000000f,0.047059f,0.364706f},{0.000000f,0.052941f,0.368627f},{0.000000f,0.058824f,0.372549f},{0.000000f,0.064706f,0.376471f},{0.000000f,0.070588f,0.380392f},{0.000000f,0.076471f,0.384314f},{0.000000f,0.082353f,0.388235f},{0.000000f,0.088235f,0.392157f},{0.000000f,0.094118f,0.396078f},{0.000000f,0.100000f,0.400000f},{0.000000f,0.105882f,0.403922f},{0.000000f,0.111765f,0.407843f},{0.000000f,0.117647f,0.411765f},{0.000000f,0.123529f,0.415686f},{0.000000f,0.129412f,0.419608f},{0.000000f,0.135294f,0.423529f},{0.000000f,0.141176f,0.427451f},{0.000000f,0.147059f,0.431373f},{0.000000f,0.152941f,0.435294f},{0.000000f,0.158824f,0.439216f},{0.000000f,0.164706f,0.443137f},{0.000000f,0.170588f,0.447059f},{0.000000f,0.176471f,0.450980f},{0.000000f,0.182353f,0.454902f},{0.000000f,0.188235f,0.458824f},{0.000000f,0.194118f,0.462745f},{0.000000f,0.200000f,0.466667f},{0.000000f,0.205882f,0.470588f},{0.000000f,0.211765f,0.474510f},{0.000000f,0.217647f,0.478431f},{0.000000f,0.223529f,0.482353f},{0.000000f,0.229412f,0.486275f},{0.000000f,0.235294f,0.490196f},{0.000000f,0.241176f,0.494118f},{0.000000f,0.247059f,0.498039f},{0.000000f,0.252941f,0.501961f},{0.000000f,0.258824f,0.505882f},{0.000000f,0.264706f,0.509804f},{0.000000f,0.270588f,0.513725f},{0.000000f,0.276471f,0.517647f},{0.000000f,0.282353f,0.521569f},{0.000000f,0.288235f,0.525490f},{0.000000f,0.294118f,0.529412f},{0.000000f,0.300000f,0.533333f},{0.000000f,0.305882f,0.537255f},{0.000000f,0.311765f,0.541176f},{0.000000f,0.317647f,0.545098f},{0.000000f,0.323529f,0.549020f},{0.000000f,0.329412f,0.552941f},{0.000000f,0.335294f,0.556863f},{0.000000f,0.341176f,0.560784f},{0.000000f,0.347059f,0.564706f},{0.000000f,0.352941f,0.568627f},{0.000000f,0.358824f,0.572549f},{0.000000f,0.364706f,0.576471f},{0.000000f,0.370588f,0.580392f},{0.000000f,0.376471f,0.584314f},{0.000000f,0.382353f,0.588235f},{0.000000f,0.388235f,0.592157f},{0.000000f,0.394118f,0.596078f},{0.000000f,0.400000f,0.600000f},{0.000000f,0.405882f,0.603922f},{0.000000f,0.411765f,0.607843f},{0.000000f,0.417647f,0.611765f},{0.000000f,0.423529f,0.615686f},{0.000000f,0.429412f,0.619608f},{0.000000f,0.435294f,0.623529f},{0.000000f,0.441176f,0.627451f},{0.000000f,0.447059f,0.631373f},{0.000000f,0.452941f,0.635294f},{0.000000f,0.458824f,0.639216f},{0.000000f,0.464706f,0.643137f},{0.000000f,0.470588f,0.647059f},{0.000000f,0.476471f,0.650980f},{0.000000f,0.482353f,0.654902f},{0.000000f,0.488235f,0.658824f},{0.000000f,0.494118f,0.662745f},{0.000000f,0.500000f,0.666667f},{0.011765f,0.505882f,0.670588f},{0.023529f,0.511765f,0.674510f},{0.035294f,0.517647f,0.678431f},{0.047059f,0.523529f,0.682353f},{0.058824f,0.529412f,0.686275f},{0.070588f,0.535294f,0.690196f},{0.082353f,0.541176f,0.694118f},{0.094118f,0.547059f,0.698039f},{0.105882f,0.552941f,0.701961f},{0.117647f,0.558824f,0.705882f},{0.129412f,0.564706f,0.709804f},{0.141176f,0.570588f,0.713725f},{0.152941f,0.576471f,0.717647f},{0.164706f,0.582353f,0.721569f},{0.176471f,0.588235f,0.725490f},{0.188235f,0.594118f,0.729412f},{0.200000f,0.600000f,0.733333f},{0.211765f,0.605882f,0.737255f},{0.223529f,0.611765f,0.741176f},{0.235294f,0.617647f,0.745098f},{0.247059f,0.623529f,0.749020f},{0.258824f,0.629412f,0.752941f},{0.270588f,0.635294f,0.756863f},{0.282353f,0.641176f,0.760784f},{0.294118f,0.647059f,0.764706f},{0.305882f,0.652941f,0.768627f},{0.317647f,0.658824f,0.772549f},{0.329412f,0.664706f,0.776471f},{0.341176f,0.670588f,0.780392f},{0.352941f,0.676471f,0.784314f},{0.364706f,0.682353f,0.788235f},{0.376471f,0.688235f,0.792157f},{0.388235f,0.694118f,0.796078f},{0.400000f,0.700000f,0.800000f},{0.411765f,0.705882f,0.803922f},{0.423529f,0.711765f,0.807843f},{0.435294f,0.717647f,0.811765f},{0.447059f,0.723529f,0.815686f},{0.458824f,0.729412f,0.819608f},{0.470588f,0.735294f,0.823529f},{0.482353f,0.741176f,0.827451f},{0.494118f,0.747059f,0.831373f},{0.505882f,0.752941f,0.835294f},{0.517647f,0.758824f,0.839216f},{0.529412f,0.764706f,0.843137f},{0.541176f,0.770588f,0.847059f},{0.552941f,0.776471f,0.850980f},{0.564706f,0.782353f,0.854902f},{0.576471f,0.788235f,0.858824f},{0.588235f,0.794118f,0.862745f},{0.600000f,0.800000f,0.866667f},{0.611765f,0.805882f,0.870588f},{0.623529f,0.811765f,0.874510f},{0.635294f,0.817647f,0.878431f},{0.647059f,0.823529f,0.882353f},{0.658824f,0.829412f,0.886275f},{0.670588f,0.835294f,0.890196f},{0.682353f,0.841176f,0.894118f},{0.694118f,0.847059f,0.898039f},{0.705882f,0.852941f,0.901961f},{0.717647f,0.858824f,0.905882f},{0.729412f,0.864706f,0.909804f},{0.741176f,0.870588f,0.913725f},{0.752941f,0.876471f,0.917647f},{0.764706f,0.882353f,0.921569f},{0.776471f,0.888235f,0.925490f},{0.788235f,0.894118f,0.929412f},{0.800000f,0.900000f,0.933333f},{0.811765f,0.905882f,0.937255f},{0.823529f,0.911765f,0.941176f},{0.835294f,0.917647f,0.945098f},{0.847059f,0.923529f,0.949020f},{0.858824f,0.929412f,0.952941f},{0.870588f,0.935294f,0.956863f},{0.882353f,0.941176f,0.960784f},{0.894118f,0.947059f,0.964706f},{0.905882f,0.952941f,0.968627f},{0.917647f,0.958824f,0.972549f},{0.929412f,0.964706f,0.976471f},{0.941176f,0.970588f,0.980392f},{0.952941f,0.976471f,0.984314f},{0.964706f,0.982353f,0.988235f},{0.976471f,0.988235f,0.992157f},{0.988235f,0.994118f,0.996078f},{1.000000f,1.000000f,1.000000f}}}},
  {"rainbow", {{{0.500000f,0.000000f,1.000000f},{0.492157f,0.012320f,0.999981f},{0.484314f,0.024637f,0.999924f},{0.476471f,0.036951f,0.999829f},{0.468627f,0.049260f,0.999696f},{0.460784f,0.061561f,0.999526f},{0.452941f,0.073853f,0.999317f},{0.445098f,0.086133f,0.999070f},{0.437255f,0.098400f,0.998786f},{0.429412f,0.110653f,0.998464f},{0.421569f,0.122888f,0.998103f},{0.413725f,0.135105f,0.997705f},{0.405882f,0.147302f,0.997269f},{0.398039f,0.159476f,0.996795f},{0.390196f,0.171626f,0.996284f},{0.382353f,0.183750f,0.995734f},{0.374510f,0.195845f,0.995147f},{0.366667f,0.207912f,0.994522f},{0.358824f,0.219946f,0.993859f},{0.350980f,0.231948f,0.993159f},{0.343137f,0.243914f,0.992421f},{0.335294f,0.255843f,0.991645f},{0.327451f,0.267733f,0.990831f},{0.319608f,0.279583f,0.989980f},{0.311765f,0.291390f,0.989092f},{0.303922f,0.303153f,0.988165f},{0.296078f,0.314870f,0.987202f},{0.288235f,0.326539f,0.986201f},{0.280392f,0.338158f,0.985162f},{0.272549f,0.349727f,0.984086f},{0.264706f,0.361242f,0.982973f},{0.256863f,0.372702f,0.981823f},{0.249020f,0.384106f,0.980635f},{0.241176f,0.395451f,0.979410f},{0.233333f,0.406737f,0.978148f},{0.225490f,0.417960f,0.976848f},{0.217647f,0.429121f,0.975512f},{0.209804f,0.440216f,0.974139f},{0.201961f,0.451244f,0.972728f},{0.194118f,0.462204f,0.971281f},{0.186275f,0.473094f,0.969797f},{0.178431f,0.483911f,0.968276f},{0.170588f,0.494656f,0.966718f},{0.162745f,0.505325f,0.965124f},{0.154902f,0.515918f,0.963493f},{0.147059f,0.526432f,0.961826f},{0.139216f,0.536867f,0.960122f},{0.131373f,0.547220f,0.958381f},{0.123529f,0.557489f,0.956604f},{0.115686f,0.567675f,0.954791f},{0.107843f,0.577774f,0.952942f},{0.100000f,0.587785f,0.951057f},{0.092157f,0.597707f,0.949135f},{0.084314f,0.607539f,0.947177f},{0.076471f,0.617278f,0.945184f},{0.068627f,0.626924f,0.943154f},{0.060784f,0.636474f,0.941089f},{0.052941f,0.645928f,0.938988f},{0.045098f,0.655284f,0.936852f},{0.037255f,0.664540f,0.934680f},{0.029412f,0.673696f,0.932472f},{0.021569f,0.682749f,0.930229f},{0.013725f,0.691698f,0.927951f},{0.005882f,0.700543f,0.925638f},{0.001961f,0.709281f,0.923289f},{0.009804f,0.717912f,0.920906f},{0.017647f,0.726434f,0.918487f},{0.025490f,0.734845f,0.916034f},{0.033333f,0.743145f,0.913545f},{0.041176f,0.751332f,0.911023f},{0.049020f,0.759405f,0.908465f},{0.056863f,0.767363f,0.905873f},{0.064706f,0.775204f,0.903247f},{0.072549f,0.782928f,0.900587f},{0.080392f,0.790532f,0.897892f},{0.088235f,0.798017f,0.895163f},{0.096078f,0.805381f,0.892401f},{0.103922f,0.812622f,0.889604f},{0.111765f,0.819740f,0.886774f},{0.119608f,0.826734f,0.883910f},{0.127451f,0.833602f,0.881012f},{0.135294f,0.840344f,0.878081f},{0.143137f,0.846958f,0.875117f},{0.150980f,0.853444f,0.872120f},{0.158824f,0.859800f,0.869089f},{0.166667f,0.866025f,0.866025f},{0.174510f,0.872120f,0.862929f},{0.182353f,0.878081f,0.859800f},{0.190196f,0.883910f,0.856638f},{0.198039f,0.889604f,0.853444f},{0.205882f,0.895163f,0.850217f},{0.213725f,0.900587f,0.846958f},{0.221569f,0.905873f,0.843667f},{0.229412f,0.911023f,0.840344f},{0.237255f,0.916034f,0.836989f},{0.245098f,0.920906f,0.833602f},{0.252941f,0.925638f,0.830184f},{0.260784f,0.930229f,0.826734f},{0.268627f,0.934680f,0.823253f},{0.276471f,0.938988f,0.819740f},{0.284314f,0.943154f,0.816197f},{0.292157f,0.947177f,0.812622f},{0.300000f,0.951057f,0.809017f},{0.307843f,0.954791f,0.805381f},{0.315686f,0.958381f,0.801714f},{0.323529f,0.961826f,0.798017f},{0.331373f,0.965124f,0.794290f},{0.339216f,0.968276f,0.790532f},{0.347059f,0.971281f,0.786745f},{0.354902f,0.974139f,0.782928f},{0.362745f,0.976848f,0.779081f},{0.370588f,0.979410f,0.775204f},{0.378431f,0.981823f,0.771298f},{0.386275f,0.984086f,0.767363f},{0.394118f,0.986201f,0.763398f},{0.401961f,0.988165f,0.759405f},{0.409804f,0.989980f,0.755383f},{0.417647f,0.991645f,0.751332f},{0.425490f,0.993159f,0.747253f},{0.433333f,0.994522f,0.743145f},{0.441176f,0.995734f,0.739009f},{0.449020f,0.996795f,0.734845f},{0.456863f,0.997705f,0.730653f},{0.464706f,0.998464f,0.726434f},{0.472549f,0.999070f,0.722186f},{0.480392f,0.999526f,0.717912f},{0.488235f,0.999829f,0.713610f},{0.496078f,0.999981f,0.709281f},{0.503922f,0.999981f,0.704926f},{0.511765f,0.999829f,0.700543f},{0.519608f,0.999526f,0.696134f},{0.527451f,0.999070f,0.691698f},{0.535294f,0.998464f,0.687237f},{0.543137f,0.997705f,0.682749f},{0.550980f,0.996795f,0.678235f},{0.558824f,0.995734f,0.673696f},{0.566667f,0.994522f,0.669131f},{0.574510f,0.993159f,0.664540f},{0.582353f,0.991645f,0.659925f},{0.590196f,0.989980f,0.655284f},{0.598039f,0.988165f,0.650618f},{0.605882f,0.986201f,0.645928f},{0.613725f,0.984086f,0.641213f},{0.621569f,0.981823f,0.636474f},{0.629412f,0.979410f,0.631711f},{0.637255f,0.976848f,0.626924f},{0.645098f,0.974139f,0.622113f},{0.652941f,0.971281f,0.617278f},{0.660784f,0.968276f,0.612420f},{0.668627f,0.965124f,0.607539f},{0.676471f,0.961826f,0.602635f},{0.684314f,0.958381f,0.597707f},{0.692157f,0.954791f,0.592758f},{0.700000f,0.951057f,0.587785f},{0.707843f,0.947177f,0.582791f},{0.715686f,0.943154f,0.577774f},{0.723529f,0.938988f,0.572735f},{0.731373f,0.934680f,0.567675f},{0.739216f,0.930229f,0.562593f},{0.747059f,0.925638f,0.557489f},{0.754902f,0.920906f,0.552365f},{0.762745f,0.916034f,0.547220f},{0.770588f,0.911023f,0.542053f},{0.778431f,0.905873f,0.536867f},{0.786275f,0.900587f,0.531659f},{0.794118f,0.895163f,0.526432f},{0.801961f,0.889604f,0.521185f},{0.809804f,0.883910f,0.515918f},{0.817647f,0.878081f,0.510631f},{0.825490f,0.872120f,0.505325f},{0.833333f,0.866025f,0.500000f},{0.841176f,0.859800f,0.494656f},{0.849020f,0.853444f,0.489293f},{0.856863f,0.846958f,0.483911f},{0.864706f,0.840344f,0.478512f},{0.872549f,0.833602f,0.473094f},{0.880392f,0.826734f,0.467658f},{0.888235f,0.819740f,0.462204f},{0.896078f,0.812622f,0.456733f},{0.903922f,0.805381f,0.451244f},{0.911765f,0.798017f,0.445738f},{0.919608f,0.790532f,0.440216f},{0.927451f,0.782928f,0.434676f},{0.935294f,0.775204f,0.429121f},{0.943137f,0.767363f,0.423549f},{0.950980f,0.759405f,0.417960f},{0.958824f,0.751332f,0.412356f},{0.966667f,0.743145f,0.406737f},{0.974510f,0.734845f,0.401102f},{0.982353f,0.726434f,0.395451f},{0.990196f,0.717912f,0.389786f},{0.998039f,0.709281f,0.384106f},{1.000000f,0.700543f,0.378411f},{1.000000f,0.691698f,0.372702f},{1.000000f,0.682749f,0.366979f},{1.000000f,0.673696f,0.361242f},{1.000000f,0.664540f,0.355491f},{1.000000f,0.655284f,0.349727f},{1.000000f,0.645928f,0.343949f},{1.000000f,0.636474f,0.338158f},{1.000000f,0.626924f,0.332355f},{1.000000f,0.617278f,0.326539f},{1.000000f,0.607539f,0.320710f},{1.000000f,0.597707f,0.314870f},{1.000000f,0.587785f,0.309017f},{1.000000f,0.577774f,0.303153f},{1.000000f,0.567675f,0.297277f},{1.000000f,0.557489f,0.291390f},{1.000000f,0.547220f,0.285492f},{1.000000f,0.536867f,0.279583f},{1.000000f,0.526432f,0.273663f},{1.000000f,0.515918f,0.267733f},{1.000000f,0.505325f,0.261793f},{1.000000f,0.494656f,0.255843f},{1.000000f,0.483911f,0.249883f},{1.000000f,0.473094f,0.243914f},{1.000000f,0.462204f,0.237935f},{1.000000f,0.451244f,0.231948f},{1.000000f,0.440216f,0.225951f},{1.000000f,0.429121f,0.219946f},{1.000000f,0.417960f,0.213933f},{1.000000f,0.406737f,0.207912f},{1.000000f,0.395451f,0.201882f},{1.000000f,0.384106f,0.195845f},{1.000000f,0.372702f,0.189801f},{1.000000f,0.361242f,0.183750f},{1.000000f,0.349727f,0.177691f},{1.000000f,0.338158f,0.171626f},{1.000000f,0.326539f,0.165554f},{1.000000f,0.314870f,0.159476f},{1.000000f,0.303153f,0.153392f},{1.000000f,0.291390f,0.147302f},{1.000000f,0.279583f,0.141206f},{1.000000f,0.267733f,0.135105f},{1.000000f,0.255843f,0.128999f},{1.000000f,0.243914f,0.122888f},{1.000000f,0.231948f,0.116773f},{1.000000f,0.219946f,0.110653f},{1.000000f,0.207912f,0.104528f},{1.000000f,0.195845f,0.098400f},{1.000000f,0.183750f,0.092268f},{1.000000f,0.171626f,0.086133f},{1.000000f,0.159476f,0.079994f},{1.000000f,0.147302f,0.073853f},{1.000000f,0.135105f,0.067708f},{1.000000f,0.122888f,0.061561f},{1.000000f,0.110653f,0.055411f},{1.000000f,0.098400f,0.049260f},{1.000000f,0.086133f,0.043107f},{1.000000f,0.073853f,0.036951f},{1.000000f,0.061561f,0.030795f},{1.000000f,0.049260f,0.024637f},{1.000000f,0.036951f,0.018479f},{1.000000f,0.024637f,0.012320f},{1.000000f,0.012320f,0.006160f},{1.000000f,0.000000f,0.000000f}}}},
  {"terrain", {{{0.200000f,0.200000f,0.600000f},{0.194771f,0.210458f,0.610458f},{0.189542f,0.220915f,0.620915f},{0.184314f,0.231373f,0.631373f},{0.179085f,0.241830f,0.641830f},{0.173856f,0.252288f,0.652288f},{0.168627f,0.262745f,0.662745f},{0.163399f,0.273203f,0.673203f},{0.158170f,0.283660f,0.683660f},{0.152941f,0.294118f,0.694118f},{0.147712f,0.304575f,0.704575f},{0.142484f,0.315033f,0.715033f},{0.137255f,0.325490f,0.725490f},{0.132026f,0.335948f,0.735948f},{0.126797f,0.346405f,0.746405f},{0.121569f,0.356863f,0.756863f},{0.116340f,0.367320f,0.767320f},{0.111111f,0.377778f,0.777778f},{0.105882f,0.388235f,0.788235f},{0.100654f,0.398693f,0.798693f},{0.095425f,0.409150f,0.809150f},{0.090196f,0.419608f,0.819608f},{0.084967f,0.430065f,0.830065f},{0.079739f,0.440523f,0.840523f},{0.074510f,0.450980f,0.850980f},{0.069281f,0.461438f,0.861438f},{0.064052f,0.471895f,0.871895f},{0.058824f,0.482353f,0.882353f},{0.053595f,0.492810f,0.892810f},{0.048366f,0.503268f,0.903268f},{0.043137f,0.513725f,0.913725f},{0.037908f,0.524183f,0.924183f},{0.032680f,0.534641f,0.934641f},{0.027451f,0.545098f,0.945098f},{0.022222f,0.555556f,0.955556f},{0.016993f,0.566013f,0.966013f},{0.011765f,0.576471f,0.976471f},{0.006536f,0.586928f,0.986928f},{0.001307f,0.597386f,0.997386f},{0.000000f,0.605882f,0.982353f},{0.000000f,0.613725f,0.958824f},{0.000000f,0.621569f,0.935294f},{0.000000f,0.629412f,0.911765f},{0.000000f,0.637255f,0.888235f},{0.000000f,0.645098f,0.864706f},{0.000000f,0.652941f,0.841176f},{0.000000f,0.660784f,0.817647f},{0.000000f,0.668627f,0.794118f},{0.000000f,0.676471f,0.770588f},{0.000000f,0.684314f,0.747059f},{0.000000f,0.692157f,0.723529f},{0.000000f,0.700000f,0.700000f},{0.000000f,0.707843f,0.676471f},{0.000000f,0.715686f,0.652941f},{0.000000f,0.723529f,0.629412f},{0.000000f,0.731373f,0.605882f},{0.000000f,0.739216f,0.582353f},{0.000000f,0.747059f,0.558824f},{0.000000f,0.754902f,0.535294f},{0.000000f,0.762745f,0.511765f},{0.000000f,0.770588f,0.488235f},{0.000000f,0.778431f,0.464706f},{0.000000f,0.786275f,0.441176f},{0.000000f,0.794118f,0.417647f},{0.003922f,0.800784f,0.400784f},{0.019608f,0.803922f,0.403922f},{0.035294f,0.807059f,0.407059f},{0.050980f,0.810196f,0.410196f},{0.066667f,0.813333f,0.413333f},{0.082353f,0.816471f,0.416471f},{0.098039f,0.819608f,0.419608f},{0.113725f,0.822745f,0.422745f},{0.129412f,0.825882f,0.425882f},{0.145098f,0.829020f,0.429020f},{0.160784f,0.832157f,0.432157f},{0.176471f,0.835294f,0.435294f},{0.192157f,0.838431f,0.438431f},{0.207843f,0.841569f,0.441569f},{0.223529f,0.844706f,0.444706f},{0.239216f,0.847843f,0.447843f},{0.254902f,0.850980f,0.450980f},{0.270588f,0.854118f,0.454118f},{0.286275f,0.857255f,0.457255f},{0.301961f,0.860392f,0.460392f},{0.317647f,0.863529f,0.463529f},{0.333333f,0.866667f,0.466667f},{0.349020f,0.869804f,0.469804f},{0.364706f,0.872941f,0.472941f},{0.380392f,0.876078f,0.476078f},{0.396078f,0.879216f,0.479216f},{0.411765f,0.882353f,0.482353f},{0.427451f,0.885490f,0.485490f},{0.443137f,0.888627f,0.488627f},{0.458824f,0.891765f,0.491765f},{0.474510f,0.894902f,0.494902f},{0.490196f,0.898039f,0.498039f},{0.505882f,0.901176f,0.501176f},{0.521569f,0.904314f,0.504314f},{0.537255f,0.907451f,0.507451f},{0.552941f,0.910588f,0.510588f},{0.568627f,0.913725f,0.513725f},{0.584314f,0.916863f,0.516863f},{0.600000f,0.920000f,0.520000f},{0.615686f,0.923137f,0.523137f},{0.631373f,0.926275f,0.526275f},{0.647059f,0.929412f,0.529412f},{0.662745f,0.932549f,0.532549f},{0.678431f,0.935686f,0.535686f},{0.694118f,0.938824f,0.538824f},{0.709804f,0.941961f,0.541961f},{0.725490f,0.945098f,0.545098f},{0.741176f,0.948235f,0.548235f},{0.756863f,0.951373f,0.551373f},{0.772549f,0.954510f,0.554510f},{0.788235f,0.957647f,0.557647f},{0.803922f,0.960784f,0.560784f},{0.819608f,0.963922f,0.563922f},{0.835294f,0.967059f,0.567059f},{0.850980f,0.970196f,0.570196f},{0.866667f,0.973333f,0.573333f},{0.882353f,0.976471f,0.576471f},{0.898039f,0.979608f,0.579608f},{0.913725f,0.982745f,0.582745f},{0.929412f,0.985882f,0.585882f},{0.945098f,0.989020f,0.589020f},{0.960784f,0.992157f,0.592157f},{0.976471f,0.995294f,0.595294f},{0.992157f,0.998431f,0.598431f},{0.996078f,0.994980f,0.597882f},{0.988235f,0.984941f,0.593647f},{0.980392f,0.974902f,0.589412f},{0.972549f,0.964863f,0.585176f},{0.964706f,0.954824f,0.580941f},{0.956863f,0.944784f,0.576706f},{0.949020f,0.934745f,0.572471f},{0.941176f,0.924706f,0.568235f},{0.933333f,0.914667f,0.564000f},{0.925490f,0.904627f,0.559765f},{0.917647f,0.894588f,0.555529f},{0.909804f,0.884549f,0.551294f},{0.901961f,0.874510f,0.547059f},{0.894118f,0.864471f,0.542824f},{0.886275f,0.854431f,0.538588f},{0.878431f,0.844392f,0.534353f},{0.870588f,0.834353f,0.530118f},{0.862745f,0.824314f,0.525882f},{0.854902f,0.814275f,0.521647f},{0.847059f,0.804235f,0.517412f},{0.839216f,0.794196f,0.513176f},{0.831373f,0.784157f,0.508941f},{0.823529f,0.774118f,0.504706f},{0.815686f,0.764078f,0.500471f},{0.807843f,0.754039f,0.496235f},{0.800000f,0.744000f,0.492000f},{0.792157f,0.733961f,0.487765f},{0.784314f,0.723922f,0.483529f},{0.776471f,0.713882f,0.479294f},{0.768627f,0.703843f,0.475059f},{0.760784f,0.693804f,0.470824f},{0.752941f,0.683765f,0.466588f},{0.745098f,0.673725f,0.462353f},{0.737255f,0.663686f,0.458118f},{0.729412f,0.653647f,0.453882f},{0.721569f,0.643608f,0.449647f},{0.713725f,0.633569f,0.445412f},{0.705882f,0.623529f,0.441176f},{0.698039f,0.613490f,0.436941f},{0.690196f,0.603451f,0.432706f},{0.682353f,0.593412f,0.428471f},{0.674510f,0.583373f,0.424235f},{0.666667f,0.573333f,0.420000f},{0.658824f,0.563294f,0.415765f},{0.650980f,0.553255f,0.411529f},{0.643137f,0.543216f,0.407294f},{0.635294f,0.533176f,0.403059f},{0.627451f,0.523137f,0.398824f},{0.619608f,0.513098f,0.394588f},{0.611765f,0.503059f,0.390353f},{0.603922f,0.493020f,0.386118f},{0.596078f,0.482980f,0.381882f},{0.588235f,0.472941f,0.377647f},{0.580392f,0.462902f,0.373412f},{0.572549f,0.452863f,0.369176f},{0.564706f,0.442824f,0.364941f},{0.556863f,0.432784f,0.360706f},{0.549020f,0.422745f,0.356471f},{0.541176f,0.412706f,0.352235f},{0.533333f,0.402667f,0.348000f},{0.525490f,0.392627f,0.343765f},{0.517647f,0.382588f,0.339529f},{0.509804f,0.372549f,0.335294f},{0.501961f,0.362510f,0.331059f},{0.505882f,0.367529f,0.337882f},{0.513725f,0.377569f,0.348392f},{0.521569f,0.387608f,0.358902f},{0.529412f,0.397647f,0.369412f},{0.537255f,0.407686f,0.379922f},{0.545098f,0.417725f,0.390431f},{0.552941f,0.427765f,0.400941f},{0.560784f,0.437804f,0.411451f},{0.568627f,0.447843f,0.421961f},{0.576471f,0.457882f,0.432471f},{0.584314f,0.467922f,0.442980f},{0.592157f,0.477961f,0.453490f},{0.600000f,0.488000f,0.464000f},{0.607843f,0.498039f,0.474510f},{0.615686f,0.508078f,0.485020f},{0.623529f,0.518118f,0.495529f},{0.631373f,0.528157f,0.506039f},{0.639216f,0.538196f,0.516549f},{0.647059f,0.548235f,0.527059f},{0.654902f,0.558275f,0.537569f},{0.662745f,0.568314f,0.548078f},{0.670588f,0.578353f,0.558588f},{0.678431f,0.588392f,0.569098f},{0.686275f,0.598431f,0.579608f},{0.694118f,0.608471f,0.590118f},{0.701961f,0.618510f,0.600627f},{0.709804f,0.628549f,0.611137f},{0.717647f,0.638588f,0.621647f},{0.725490f,0.648627f,0.632157f},{0.733333f,0.658667f,0.642667f},{0.741176f,0.668706f,0.653176f},{0.749020f,0.678745f,0.663686f},{0.756863f,0.688784f,0.674196f},{0.764706f,0.698824f,0.684706f},{0.772549f,0.708863f,0.695216f},{0.780392f,0.718902f,0.705725f},{0.788235f,0.728941f,0.716235f},{0.796078f,0.738980f,0.726745f},{0.803922f,0.749020f,0.737255f},{0.811765f,0.759059f,0.747765f},{0.819608f,0.769098f,0.758275f},{0.827451f,0.779137f,0.768784f},{0.835294f,0.789176f,0.779294f},{0.843137f,0.799216f,0.789804f},{0.850980f,0.809255f,0.800314f},{0.858824f,0.819294f,0.810824f},{0.866667f,0.829333f,0.821333f},{0.874510f,0.839373f,0.831843f},{0.882353f,0.849412f,0.842353f},{0.890196f,0.859451f,0.852863f},{0.898039f,0.869490f,0.863373f},{0.905882f,0.879529f,0.873882f},{0.913725f,0.889569f,0.884392f},{0.921569f,0.899608f,0.894902f},{0.929412f,0.909647f,0.905412f},{0.937255f,0.919686f,0.915922f},{0.945098f,0.929725f,0.926431f},{0.952941f,0.939765f,0.936941f},{0.960784f,0.949804f,0.947451f},{0.968627f,0.959843f,0.957961f},{0.976471f,0.969882f,0.968471f},{0.984314f,0.979922f,0.978980f},{0.992157f,0.989961f,0.989490f},{1.000000f,1.000000f,1.000000f}}}},
}};
// clang-format on

}  // namespace presspose::data::detail
