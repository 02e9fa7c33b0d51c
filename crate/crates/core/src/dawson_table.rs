// Generated by `calibrate dawson-table`; do not edit by hand.

/// Centres are `TABLE_FIRST + k * TABLE_STEP`.
pub(crate) const TABLE_FIRST: f64 = 0.5;
pub(crate) const TABLE_STEP: f64 = 0.0625;
/// Degree of the local Taylor polynomial.
pub(crate) const TABLE_DEGREE: usize = 10;
/// Start of the asymptotic branch; the table covers `[0.5, ASYMPTOTIC_FROM)`.
pub(crate) const ASYMPTOTIC_FROM: f64 = 10.0;

/// `(F(x_k), F'(x_k))` at the table centres.
pub(crate) const TABLE: &[(f64, f64)] = &[
    (0.4244363835020223, 0.5755636164979777),
    (0.45759725401184637, 0.4852030892366729),
    (0.4850624642080814, 0.39367191973989824),
    (0.5068266398972285, 0.30311337014131073),
    (0.5230127677445182, 0.21548084838322262),
    (0.5338584424352436, 0.13248003104272912),
    (0.539698982896529, 0.05552677993107441),
    (0.5409484362871989, -0.014278318038497991),
    (0.5380795069127684, -0.07615901382553684),
    (0.5316034028685409, -0.12965723109564947),
    (0.5220504950180077, -0.17461361379051735),
    (0.5099525428857578, -0.21113728935367468),
    (0.4958270739643261, -0.2395676849108153),
    (0.4801643210580724, -0.26043134277743996),
    (0.4634169401539564, -0.27439658542338013),
    (0.44599256075745897, -0.28222861217769446),
    (0.4282490710853986, -0.2847472132561959),
    (0.41049241856366214, -0.2827888080114442),
    (0.3929766153972907, -0.27717400004119463),
    (0.37590558044166783, -0.2686813339906289),
    (0.3594364206717429, -0.25802747235110024),
    (0.3436837547860404, -0.2458536110993965),
    (0.328724703146287, -0.23271763679857613),
    (0.31460420687901874, -0.2190913016561976),
    (0.30134038892379195, -0.20536155569516787),
    (0.28892972577029047, -0.19183511880244827),
    (0.2773518558940047, -0.17874538754951988),
    (0.2665739056570836, -0.16626083724974092),
    (0.25655426284484917, -0.1544941828018212),
    (0.24724577019927277, -0.14351168717163656),
    (0.238598345334465, -0.13334214033870878),
    (0.2305610590945992, -0.12398516308617114),
    (0.2230837221674355, -0.1154186108371774),
    (0.21611804045362137, -0.1076049573248096),
    (0.20961840443292779, -0.10049662327287091),
    (0.20354237779805767, -0.09404028066456005),
    (0.19785094717415452, -0.08818020945784988),
    (0.19250858894361172, -0.0828608128078159),
    (0.1874832020359483, -0.07802841170670267),
    (0.1827459478245916, -0.07363244346947566),
    (0.1782710306105583, -0.06962618366334973),
    (0.17403544500175647, -0.06596710063575834),
    (0.17001871009157668, -0.06261693807235422),
    (0.16620260484546548, -0.05954160588984234),
    (0.162570914560687, -0.05671094464446548),
    (0.15910919463977924, -0.05409841448853741),
    (0.15580455513085378, -0.05168074713326305),
    (0.15264546742882443, -0.049437588573167955),
    (0.14962159308075648, -0.047351151565295395),
    (0.14672363367662986, -0.0454058899459877),
    (0.14394320022365867, -0.04358820162152525),
    (0.14127270010124282, -0.04188616324666576),
    (0.1387052395935912, -0.040289296951933985),
    (0.1362345400327812, -0.03878836774995666),
    (0.13385486570593785, -0.037375209221018446),
    (0.1315609618486673, -0.036042574558255006),
    (0.12934800123600512, -0.03478400988804092),
    (0.1272115380737395, -0.03359374684913335),
    (0.12514746807550867, -0.03246661162294653),
    (0.12315199377795376, -0.03139794789036275),
    (0.12122159429432365, -0.030383551501751083),
    (0.11935299883552361, -0.02941961495639116),
    (0.11754316343739785, -0.02850268007723111),
    (0.11578925042561165, -0.027629597527303366),
    (0.11408861022682498, -0.02679749204142482),
    (0.11243876519901135, -0.02600373244097849),
    (0.11083739520678544, -0.02524590566276527),
    (0.10928232471129717, -0.024521794168410976),
    (0.1077715111802445, -0.023829356212322707),
    (0.1063030346532361, -0.02316670853739742),
    (0.10487508832225756, -0.022532111142011136),
    (0.10348597000731946, -0.02192395382227969),
    (0.10213407442427684, -0.021340744242768356),
    (0.10081788615594074, -0.02078109732890004),
    (0.09953597324946795, -0.020243725807046514),
    (0.09828698137302408, -0.019727431745124886),
    (0.09706962847320189, -0.01923109896861986),
    (0.09588269988190444, -0.01875368624523473),
    (0.09472504382758852, -0.01829422114657662),
    (0.09359556731107926, -0.017851794507987056),
    (0.09249323231075476, -0.01742555541830236),
    (0.09141705228587312, -0.01701470668033844),
    (0.09036608895026993, -0.016618500690536716),
    (0.08933944929166757, -0.01623623569271862),
    (0.08833628281447531, -0.015867252366466085),
    (0.08735577898627352, -0.0155109307154296),
    (0.08639716487021182, -0.015166687224988932),
    (0.08545970292734811, -0.014833972262258775),
    (0.08454268897454385, -0.014512267694526227),
    (0.08364545028494025, -0.014201084704900573),
    (0.0827673438192903, -0.013899961786306167),
    (0.08190775457753582, -0.013608462897005895),
    (0.08106609406101173, -0.013326175762646528),
    (0.0802417988365468, -0.013052710311403213),
    (0.07943432919452531, -0.012787697230197789),
    (0.0786431678936854, -0.012530786631199492),
    (0.07786781898606987, -0.012281646818908329),
    (0.07710780671612108, -0.012039963149089148),
    (0.07636267448842898, -0.011805436971683994),
    (0.0756319838991099, -0.0115777846505949),
    (0.07491531382621561, -0.011356736653910788),
    (0.0742122595749549, -0.011142036708760504),
    (0.07352243207385584, -0.010933441015517803),
    (0.07284545711831143, -0.01073071751657117),
    (0.0721809746582363, -0.010533645215308089),
    (0.07152863812682163, -0.010342013541355513),
    (0.07088811380761201, -0.010155621758471053),
    (0.0702590802373424, -0.009974278411796924),
    (0.06964122764217069, -0.009797800811475101),
    (0.06903425740512004, -0.009626014549880602),
    (0.06843788156270939, -0.009458753049963528),
    (0.06785182232890097, -0.009295857142401946),
    (0.06727581164463062, -0.00913717466945924),
    (0.06670959075131329, -0.008982560113613418),
    (0.0661529097868317, -0.008831874249183582),
    (0.06560552740262258, -0.008684983815322235),
    (0.06506721040057242, -0.008541761208872602),
    (0.06453773338852538, -0.008402084195709038),
    (0.06401687845328806, -0.008265835639286973),
    (0.06350443485009309, -0.008132903245227766),
    (0.06300019870755338, -0.008003179320854207),
    (0.06250397274720465, -0.007876560548675058),
    (0.06201556601679339, -0.007752947772892592),
    (0.06153479363652375, -0.007632245798076377),
    (0.06106147655752788, -0.007514363199210068),
    (0.06059544133187225, -0.007399212142376192),
    (0.060136519893456565, -0.0072867082153974215),
    (0.05968454934920308, -0.007176770267802026),
    (0.05923937177997214, -0.007069320259526372),
    (0.058800834050674974, -0.006964283117808985),
    (0.05836878762908806, -0.006861586601769036),
    (0.05794308841290345, -0.006761161174197454),
    (0.057523596564578366, -0.00666293988012145),
    (0.05711017635357352, -0.00656685823173339),
    (0.056702696005594515, -0.0064728540993026955),
    (0.056301027558473576, -0.006380867607715221),
    (0.05590504672435046, -0.0062908410383082924),
    (0.055514632757831264, -0.006202718735691614),
    (0.05512966832982272, -0.006116447019264655),
    (0.05475003940675701, -0.006031974099160008),
    (0.054375635134938365, -0.005949249996359747),
    (0.054006347729758285, -0.0058682264667480645),
    (0.05364207236954019, -0.005788856928878603),
    (0.05328270709378802, -0.005711096395248877),
    (0.05292815270562565, -0.005634901406887282),
    (0.052578312678225894, -0.005560229971070279),
    (0.05223309306503889, -0.005487041501998656),
    (0.05189240241363986, -0.005415296764272296),
    (0.05155615168302629, -0.0053449578190126424),
    (0.05122425416420338, -0.005275987972491235),
    (0.050896625403905375, -0.005208351727131174),
    (0.05057318313130849, -0.005142014734756328),
    (0.05025384718759853, -0.005076943751970561),
];
