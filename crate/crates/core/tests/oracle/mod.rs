#![allow(dead_code, clippy::excessive_precision, clippy::approx_constant)]
// mpmath at 30 digits, rounded to 20.

pub const ZEROS: &[(char, u32, u32, f64)] = &[
    ('D', 0, 1, 3.1415926535897932385),
    ('D', 0, 2, 6.2831853071795864769),
    ('D', 0, 3, 9.4247779607693797154),
    ('D', 0, 4, 1.2566370614359172954e+1),
    ('D', 0, 5, 1.5707963267948966192e+1),
    ('D', 0, 6, 1.8849555921538759431e+1),
    ('D', 0, 7, 2.1991148575128552669e+1),
    ('D', 0, 8, 2.5132741228718345908e+1),
    ('D', 1, 1, 4.4934094579090641753),
    ('D', 1, 2, 7.7252518369377071642),
    ('D', 1, 3, 1.0904121659428899827e+1),
    ('D', 1, 4, 1.406619391283147348e+1),
    ('D', 1, 5, 1.722075527193076874e+1),
    ('D', 1, 6, 2.0371302959287562845e+1),
    ('D', 1, 7, 2.3519452498689006546e+1),
    ('D', 1, 8, 2.6666054258812673528e+1),
    ('D', 2, 1, 5.7634591968945497914),
    ('D', 2, 2, 9.0950113304763551563),
    ('D', 2, 3, 1.2322940970566582052e+1),
    ('D', 2, 4, 1.551460301088674823e+1),
    ('D', 2, 5, 1.8689036355362822202e+1),
    ('D', 2, 6, 2.1853874222709765792e+1),
    ('D', 2, 7, 2.5012803202289612466e+1),
    ('D', 2, 8, 2.8167829707993623875e+1),
    ('D', 3, 1, 6.987932000500519959),
    ('D', 3, 2, 1.0417118547379364763e+1),
    ('D', 3, 3, 1.3698023153249249e+1),
    ('D', 3, 4, 1.6923621285213839579e+1),
    ('D', 3, 5, 2.0121806174453818286e+1),
    ('D', 3, 6, 2.3304246988939651352e+1),
    ('D', 3, 7, 2.647676366453912815e+1),
    ('D', 3, 8, 2.9642604540315809172e+1),
    ('D', 10, 1, 1.5033469303743438064e+1),
    ('D', 10, 2, 1.9025853536127759904e+1),
    ('D', 10, 3, 2.2662720658136055604e+1),
    ('D', 10, 4, 2.614276764337910001e+1),
    ('D', 10, 5, 2.953463410784392443e+1),
    ('D', 10, 6, 3.2870534597687535188e+1),
    ('D', 10, 7, 3.6168157135911227479e+1),
    ('D', 10, 8, 3.9438214480008057811e+1),
    ('N', 0, 1, 1.5707963267948966192),
    ('N', 0, 2, 4.7123889803846898577),
    ('N', 0, 3, 7.8539816339744830962),
    ('N', 0, 4, 1.0995574287564276335e+1),
    ('N', 0, 5, 1.4137166941154069573e+1),
    ('N', 0, 6, 1.7278759594743862812e+1),
    ('N', 0, 7, 2.042035224833365605e+1),
    ('N', 0, 8, 2.3561944901923449288e+1),
    ('N', 1, 1, 2.7437072699922693826),
    ('N', 1, 2, 6.1167642644617689336),
    ('N', 1, 3, 9.3166156285659645079),
    ('N', 1, 4, 1.248593736819959785e+1),
    ('N', 1, 5, 1.5643866106347758635e+1),
    ('N', 1, 6, 1.8796253353453969692e+1),
    ('N', 1, 7, 2.1945518067980511317e+1),
    ('N', 1, 8, 2.5092847019394173038e+1),
    ('N', 2, 1, 3.870238580222165012),
    ('N', 2, 2, 7.4430870539544579718),
    ('N', 2, 3, 1.0713010988255774099e+1),
    ('N', 2, 4, 1.3920521426635717221e+1),
    ('N', 2, 5, 1.7102740789047185982e+1),
    ('N', 2, 6, 2.0272001089138612606e+1),
    ('N', 2, 7, 2.3433689169693317327e+1),
    ('N', 2, 8, 2.6590555025852712701e+1),
    ('N', 3, 1, 4.9734203508228420246),
    ('N', 3, 2, 8.7217505134899414741),
    ('N', 3, 3, 1.2063591250348218233e+1),
    ('N', 3, 4, 1.5313561547672175538e+1),
    ('N', 3, 5, 1.8524206672083388116e+1),
    ('N', 3, 6, 2.1713934471662549214e+1),
    ('N', 3, 7, 2.489110019010598114e+1),
    ('N', 3, 8, 2.8060095669270149806e+1),
    ('N', 10, 1, 1.2443384282541038177e+1),
    ('N', 10, 2, 1.7072300763538827835e+1),
    ('N', 10, 3, 2.0860322178131857639e+1),
    ('N', 10, 4, 2.4411120446591094212e+1),
    ('N', 10, 5, 2.7843790757449726697e+1),
    ('N', 10, 6, 3.1205965587307723375e+1),
    ('N', 10, 7, 3.4521729993705489029e+1),
    ('N', 10, 8, 3.7804940845652521383e+1),
];

/// `(bc, ℓ, p, n, g_pn)` with zero-based p, n and P = 8.
pub const COUPLINGS: &[(char, u32, usize, usize, f64)] = &[
    ('D', 1, 0, 0, 3.9443045261050590271e-31),
    ('D', 1, 0, 1, 1.7581051212351352644),
    ('D', 1, 0, 2, 9.927486571815029104e-1),
    ('D', 1, 0, 3, 7.1150117204158631543e-1),
    ('D', 1, 0, 4, 5.5998605612033190135e-1),
    ('D', 1, 0, 5, 4.6371214770544389564e-1),
    ('D', 1, 0, 6, 3.9657674372309618889e-1),
    ('D', 1, 0, 7, 3.468624401297718907e-1),
    ('D', 1, 1, 0, -1.7581051212351352644),
    ('D', 1, 1, 1, 1.9721522630525295135e-31),
    ('D', 1, 1, 2, 2.8448694173588152666),
    ('D', 1, 1, 3, 1.5728214068323318888),
    ('D', 1, 1, 4, 1.1232483765634527707),
    ('D', 1, 1, 5, 8.858362454299849494e-1),
    ('D', 1, 1, 6, 7.3636947746855780294e-1),
    ('D', 1, 1, 7, 6.3249100961297498127e-1),
    ('D', 1, 2, 0, -9.927486571815029104e-1),
    ('D', 1, 2, 1, -2.8448694173588152666),
    ('D', 1, 2, 2, 3.9443045261050590271e-31),
    ('D', 1, 2, 3, 3.8850933995427698921),
    ('D', 1, 2, 4, 2.1139590061805428448),
    ('D', 1, 2, 5, 1.5004294605211406514),
    ('D', 1, 2, 6, 1.181117996134940029),
    ('D', 1, 2, 7, 9.8203450565534132438e-1),
    ('D', 1, 3, 0, -7.1150117204158631543e-1),
    ('D', 1, 3, 1, -1.5728214068323318888),
    ('D', 1, 3, 2, -3.8850933995427698921),
    ('D', 1, 3, 3, 0.0),
    ('D', 1, 3, 4, 4.9085881513158272254),
    ('D', 1, 3, 5, 2.6393757648772912363),
    ('D', 1, 3, 6, 1.8622168070648037807),
    ('D', 1, 3, 7, 1.4617100791627575053),
    ('D', 1, 4, 0, -5.5998605612033190135e-1),
    ('D', 1, 4, 1, -1.1232483765634527707),
    ('D', 1, 4, 2, -2.1139590061805428448),
    ('D', 1, 4, 3, -4.9085881513158272254),
    ('D', 1, 4, 4, 1.9721522630525295135e-31),
    ('D', 1, 4, 5, 5.9240516433169860805),
    ('D', 1, 4, 6, 3.1567153793212379927),
    ('D', 1, 4, 7, 2.2155993515828046221),
    ('D', 1, 5, 0, -4.6371214770544389564e-1),
    ('D', 1, 5, 1, -8.858362454299849494e-1),
    ('D', 1, 5, 2, -1.5004294605211406514),
    ('D', 1, 5, 3, -2.6393757648772912363),
    ('D', 1, 5, 4, -5.9240516433169860805),
    ('D', 1, 5, 5, -1.9721522630525295135e-31),
    ('D', 1, 5, 6, 6.9350181402600730708),
    ('D', 1, 5, 7, 3.6693240931480369962),
    ('D', 1, 6, 0, -3.9657674372309618889e-1),
    ('D', 1, 6, 1, -7.3636947746855780294e-1),
    ('D', 1, 6, 2, -1.181117996134940029),
    ('D', 1, 6, 3, -1.8622168070648037807),
    ('D', 1, 6, 4, -3.1567153793212379927),
    ('D', 1, 6, 5, -6.9350181402600730708),
    ('D', 1, 6, 6, 0.0),
    ('D', 1, 6, 7, 7.9432067494395747082),
    ('D', 1, 7, 0, -3.468624401297718907e-1),
    ('D', 1, 7, 1, -6.3249100961297498127e-1),
    ('D', 1, 7, 2, -9.8203450565534132438e-1),
    ('D', 1, 7, 3, -1.4617100791627575053),
    ('D', 1, 7, 4, -2.2155993515828046221),
    ('D', 1, 7, 5, -3.6693240931480369962),
    ('D', 1, 7, 6, -7.9432067494395747082),
    ('D', 1, 7, 7, 0.0),
    ('D', 2, 0, 0, 1.9721522630525295135e-31),
    ('D', 2, 0, 1, 2.1178526569519847638),
    ('D', 2, 0, 2, 1.197308102440009113),
    ('D', 2, 0, 3, 8.6191859434752179016e-1),
    ('D', 2, 0, 4, 6.815959391374559588e-1),
    ('D', 2, 0, 5, 5.6688200161902790693e-1),
    ('D', 2, 0, 6, 4.8668030852129090502e-1),
    ('D', 2, 0, 7, 4.2710386536897866431e-1),
    ('D', 2, 1, 0, -2.1178526569519847638),
    ('D', 2, 1, 1, 0.0),
    ('D', 2, 1, 2, 3.2422432999039984446),
    ('D', 2, 1, 3, 1.786330008333260689),
    ('D', 2, 1, 4, 1.2753335546380223984),
    ('D', 2, 1, 5, 1.0067107213426785855),
    ('D', 2, 1, 6, 8.380286988004173391e-1),
    ('D', 2, 1, 7, 7.2093446777365298063e-1),
    ('D', 2, 2, 0, -1.197308102440009113),
    ('D', 2, 2, 1, -3.2422432999039984446),
    ('D', 2, 2, 2, 7.8886090522101180541e-31),
    ('D', 2, 2, 3, 4.3036526949356600856),
    ('D', 2, 2, 4, 2.3330748569278577834),
    ('D', 2, 2, 5, 1.653506037142460926),
    ('D', 2, 2, 6, 1.3011429433015552247),
    ('D', 2, 2, 7, 1.0820629161277018136),
    ('D', 2, 3, 0, -8.6191859434752179016e-1),
    ('D', 2, 3, 1, -1.786330008333260689),
    ('D', 2, 3, 2, -4.3036526949356600856),
    ('D', 2, 3, 3, 3.9443045261050590271e-31),
    ('D', 2, 3, 4, 5.3409564990343366754),
    ('D', 2, 3, 5, 2.8625584879828193391),
    ('D', 2, 3, 6, 2.0162431308580403438),
    ('D', 2, 3, 7, 1.5813060909906137778),
    ('D', 2, 4, 0, -6.815959391374559588e-1),
    ('D', 2, 4, 1, -1.2753335546380223984),
    ('D', 2, 4, 2, -2.3330748569278577834),
    ('D', 2, 4, 3, -5.3409564990343366754),
    ('D', 2, 4, 4, 3.9443045261050590271e-31),
    ('D', 2, 4, 5, 6.3661805872338093507),
    ('D', 2, 4, 6, 3.3830132828575664191),
    ('D', 2, 4, 7, 2.3705220395969073466),
    ('D', 2, 5, 0, -5.6688200161902790693e-1),
    ('D', 2, 5, 1, -1.0067107213426785855),
    ('D', 2, 5, 2, -1.653506037142460926),
    ('D', 2, 5, 3, -2.8625584879828193391),
    ('D', 2, 5, 4, -6.3661805872338093507),
    ('D', 2, 5, 5, 3.9443045261050590271e-31),
    ('D', 2, 5, 6, 7.3844265204111349312),
    ('D', 2, 5, 7, 3.8980896616800200247),
    ('D', 2, 6, 0, -4.8668030852129090502e-1),
    ('D', 2, 6, 1, -8.380286988004173391e-1),
    ('D', 2, 6, 2, -1.3011429433015552247),
    ('D', 2, 6, 3, -2.0162431308580403438),
    ('D', 2, 6, 4, -3.3830132828575664191),
    ('D', 2, 6, 5, -7.3844265204111349312),
    ('D', 2, 6, 6, 3.9443045261050590271e-31),
    ('D', 2, 6, 7, 8.3982584293782891124),
    ('D', 2, 7, 0, -4.2710386536897866431e-1),
    ('D', 2, 7, 1, -7.2093446777365298063e-1),
    ('D', 2, 7, 2, -1.0820629161277018136),
    ('D', 2, 7, 3, -1.5813060909906137778),
    ('D', 2, 7, 4, -2.3705220395969073466),
    ('D', 2, 7, 5, -3.8980896616800200247),
    ('D', 2, 7, 6, -8.3982584293782891124),
    ('D', 2, 7, 7, 3.9443045261050590271e-31),
    ('N', 1, 0, 0, -1.3617991093813522153),
    ('N', 1, 0, 1, 4.437085753352153057e-1),
    ('N', 1, 0, 2, 1.6466241631323989243e-1),
    ('N', 1, 0, 3, 8.7519462263347200957e-2),
    ('N', 1, 0, 4, 5.4614934538635145747e-2),
    ('N', 1, 0, 5, 3.7419065495124555724e-2),
    ('N', 1, 0, 6, 2.7271122377046218377e-2),
    ('N', 1, 0, 7, 2.0771294825838763375e-2),
    ('N', 1, 1, 0, -2.8426289562759743901),
    ('N', 1, 1, 1, -1.0564735566443601184),
    ('N', 1, 1, 2, 1.4914726408433663653),
    ('N', 1, 1, 3, 6.1842760398118977983e-1),
    ('N', 1, 1, 4, 3.5260929820813429858e-1),
    ('N', 1, 1, 5, 2.3112601122864885206e-1),
    ('N', 1, 1, 6, 1.6423968145676368154e-1),
    ('N', 1, 1, 7, 1.2312325203388328725e-1),
    ('N', 1, 2, 0, -2.5259478864683854828),
    ('N', 1, 2, 1, -3.5712712691989785612),
    ('N', 1, 2, 2, -1.02358509290308641),
    ('N', 1, 2, 3, 2.4992774352748596982),
    ('N', 1, 2, 4, 1.0909334523717372606),
    ('N', 1, 2, 5, 6.4568428111906131947e-1),
    ('N', 1, 2, 6, 4.3551567729508509791e-1),
    ('N', 1, 2, 7, 3.1658771214337651377e-1),
    ('N', 1, 3, 0, -2.4365588072717375079),
    ('N', 1, 3, 1, -2.6874399574010487118),
    ('N', 1, 3, 2, -4.5358305641393991673),
    ('N', 1, 3, 3, -1.0129955671112527753),
    ('N', 1, 3, 4, 3.5017196808181247403),
    ('N', 1, 3, 5, 1.5738125635893944663),
    ('N', 1, 3, 6, 9.5311411455778618596e-1),
    ('N', 1, 3, 7, 6.5494977294968422843e-1),
    ('N', 1, 4, 0, -2.3981334641543496199),
    ('N', 1, 4, 1, -2.4167589679642779222),
    ('N', 1, 4, 2, -3.1227001846670880092),
    ('N', 1, 4, 3, -5.5229492417349262832),
    ('N', 1, 4, 4, -1.0082395892348580607),
    ('N', 1, 4, 5, 4.5026152578904504297),
    ('N', 1, 4, 6, 2.0621503193114947026),
    ('N', 1, 4, 7, 1.2683998522683304446),
    ('N', 1, 5, 0, -2.3779762991656223976),
    ('N', 1, 5, 1, -2.2926673986221301059),
    ('N', 1, 5, 2, -2.6748836504898445933),
    ('N', 1, 5, 3, -3.5924880764679769975),
    ('N', 1, 5, 4, -6.5165463909577709861),
    ('N', 1, 5, 5, -1.0056931537016448783),
    ('N', 1, 5, 6, 5.5029351551685717785),
    ('N', 1, 5, 7, 2.5536908384675685808),
    ('N', 1, 6, 0, -2.3660553676706647202),
    ('N', 1, 6, 1, -2.2242194369167363561),
    ('N', 1, 6, 2, -2.463177914035865027),
    ('N', 1, 6, 3, -2.970260466700823752),
    ('N', 1, 6, 4, -4.0745558855439619154),
    ('N', 1, 6, 5, -7.5127978234601412145),
    ('N', 1, 6, 6, -1.0041700916735345583),
    ('N', 1, 6, 7, 6.5030113334894812141),
    ('N', 1, 7, 0, -2.3584098134470787889),
    ('N', 1, 7, 1, -2.1820938619281033253),
    ('N', 1, 7, 2, -2.3432566350665679134),
    ('N', 1, 7, 3, -2.6711079628103770707),
    ('N', 1, 7, 4, -3.2798195786408297333),
    ('N', 1, 7, 5, -4.5625689126173255342),
    ('N', 1, 7, 6, -8.5103676685316455144),
    ('N', 1, 7, 7, -1.0031864843530742825),
    ('N', 2, 0, 0, -1.6682447140969793493),
    ('N', 2, 0, 1, 6.0766235381325048359e-1),
    ('N', 2, 0, 2, 2.3875306812693304412e-1),
    ('N', 2, 0, 3, 1.3177486583886614033e-1),
    ('N', 2, 0, 4, 8.444502171812797396e-2),
    ('N', 2, 0, 5, 5.9006693018999277606e-2),
    ('N', 2, 0, 6, 4.3660696964640953702e-2),
    ('N', 2, 0, 7, 3.3656623866315825182e-2),
    ('N', 2, 1, 0, -3.3432554494879847147),
    ('N', 2, 1, 1, -1.121458608839962182),
    ('N', 2, 1, 2, 1.8102734040454854472),
    ('N', 2, 1, 3, 7.6806276582222989084e-1),
    ('N', 2, 1, 4, 4.4586757419643227625e-1),
    ('N', 2, 1, 5, 2.9643683530716385552e-1),
    ('N', 2, 1, 6, 2.1307547048110481442e-1),
    ('N', 2, 1, 7, 1.6124094529925044797e-1),
    ('N', 2, 2, 0, -2.8922564568653786761),
    ('N', 2, 2, 1, -3.9858851378167046318),
    ('N', 2, 2, 2, -1.0551629767725279964),
    ('N', 2, 2, 3, 2.8729517207795983322),
    ('N', 2, 2, 4, 1.2703418105042158466),
    ('N', 2, 2, 5, 7.6001716644383435692e-1),
    ('N', 2, 2, 6, 5.1727319379498877051e-1),
    ('N', 2, 2, 7, 3.7888742775095217081e-1),
    ('N', 2, 3, 0, -2.7559308701353792527),
    ('N', 2, 3, 1, -2.9196125314729867181),
    ('N', 2, 3, 2, -4.959937758001457482),
    ('N', 2, 3, 3, -1.0319521285899799292),
    ('N', 2, 3, 4, 3.9047588029971627615),
    ('N', 2, 3, 5, 1.7696970711454329617),
    ('N', 2, 3, 6, 1.0795236573004085364),
    ('N', 2, 3, 7, 7.4646632930456668907e-1),
    ('N', 2, 4, 0, -2.6945648042582237172),
    ('N', 2, 4, 1, -2.585909018855145874),
    ('N', 2, 4, 2, -3.3461648685537122091),
    ('N', 2, 4, 3, -5.9576235420271496963),
    ('N', 2, 4, 4, -1.0209421348136691108),
    ('N', 2, 4, 5, 4.9240052316699480014),
    ('N', 2, 4, 6, 2.268465841321020966),
    ('N', 2, 4, 7, 1.4025889959549949655),
    ('N', 2, 5, 0, -2.6612843540752939799),
    ('N', 2, 5, 1, -2.43004851183736249),
    ('N', 2, 5, 2, -2.8296034009157332953),
    ('N', 2, 5, 3, -3.8163939650133033286),
    ('N', 2, 5, 4, -6.959754647025312226),
    ('N', 2, 5, 5, -1.0148164966460302598),
    ('N', 2, 5, 6, 5.9368780486646729555),
    ('N', 2, 5, 7, 2.767173271452411338),
    ('N', 2, 6, 0, -2.641100729714953636),
    ('N', 2, 6, 1, -2.3427207677141124732),
    ('N', 2, 6, 2, -2.5830120721221602249),
    ('N', 2, 6, 3, -3.1224157462561383238),
    ('N', 2, 6, 4, -4.3004308031021221122),
    ('N', 2, 6, 5, -7.9627379587972987513),
    ('N', 2, 6, 6, -1.0110469205631396848),
    ('N', 2, 6, 7, 6.9460763579586080977),
    ('N', 2, 7, 0, -2.6278982337768311733),
    ('N', 2, 7, 1, -2.2882638504564246423),
    ('N', 2, 7, 2, -2.4420826067718097147),
    ('N', 2, 7, 3, -2.7868428519202956644),
    ('N', 2, 7, 4, -3.4320518467878225518),
    ('N', 2, 7, 5, -4.7905385882450180176),
    ('N', 2, 7, 6, -8.9656802431882642615),
    ('N', 2, 7, 7, -1.0085584977012948441),
];

/// `(gauge, p, n, s_pn, η_pn)` for the Neumann ℓ = 1 block, P = 4.
pub const NEUMANN_L1: &[(&str, usize, usize, f64, f64)] = &[
    ("quadratic", 0, 0, 1.8753411866262488404e-1, -4.1353418585415055888),
    ("quadratic", 0, 1, -1.099592205085416226e-1, 1.7151824197052122384),
    ("quadratic", 0, 2, -3.3941754507410283078e-2, 5.8483597049560013935e-1),
    ("quadratic", 0, 3, -1.701197223616449252e-2, 3.0310385359543997801e-1),
    ("quadratic", 1, 0, -1.099592205085416226e-1, -1.5711551119059774574),
    ("quadratic", 1, 1, 3.0807853263887928401e-1, -1.3639645357298715217e+1),
    ("quadratic", 1, 2, -1.02516815702790814e-1, 6.8185919572958594106),
    ("quadratic", 1, 3, -2.7901424591011596651e-2, 2.2807815701265816946),
    ("quadratic", 2, 0, -3.3941754507410283078e-2, -2.1057743322860252359),
    ("quadratic", 2, 1, -1.02516815702790814e-1, 1.7558480472535144841),
    ("quadratic", 2, 2, 3.2263671565594362388e-1, -3.0051819896167823596e+1),
    ("quadratic", 2, 3, -1.0181155917342137498e-1, 1.3835729664251466945e+1),
    ("quadratic", 3, 0, -1.701197223616449252e-2, -2.2209744159396447309),
    ("quadratic", 3, 1, -2.7901424591011596651e-2, -1.0250859912556567971),
    ("quadratic", 3, 2, -1.0181155917342137498e-1, 6.80062166483720808),
    ("quadratic", 3, 3, 3.2741176469221952699e-1, -5.3069037338201245804e+1),
    ("cubic", 0, 0, 1.0358243063873607045e-1, -3.5033594626893976394),
    ("cubic", 0, 1, -1.8558611411356917072e-2, -1.7045535526707027712),
    ("cubic", 0, 2, -3.1698271830532209116e-2, 3.9010318452143967963e-1),
    ("cubic", 0, 3, -1.5861417834162073635e-2, 1.2373399632471198117e-1),
    ("cubic", 1, 0, -1.8558611411356917072e-2, -2.2592124610702240392),
    ("cubic", 1, 1, 9.1487767238971343157e-2, -5.5359440905495839376),
    ("cubic", 1, 2, 9.5691295800980279196e-3, -2.9103926336872202265),
    ("cubic", 1, 3, -2.70175939468123853e-2, 2.1429935818092984358),
    ("cubic", 2, 0, -3.1698271830532209116e-2, -2.1226631118991600286),
    ("cubic", 2, 1, 9.5691295800980279196e-3, -2.4378257462558102217),
    ("cubic", 2, 2, 8.7037749010797944781e-2, -9.6019882035579281102),
    ("cubic", 2, 3, 1.5762301121974913703e-2, -4.4938743103630324537),
    ("cubic", 3, 0, -1.5861417834162073635e-2, -2.2296357084597995375),
    ("cubic", 3, 1, -2.70175939468123853e-2, -1.0581543425206082529),
    ("cubic", 3, 2, 1.5762301121974913703e-2, -3.4047102546049064543),
    ("cubic", 3, 3, 8.5429795282121364544e-2, -1.5344379347550470823e+1),
];
