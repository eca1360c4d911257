// Frozen reference values computed once with a 40-digit evaluator.
// Columns documented per table; regenerate only if formulas change.
#pragma once

namespace fixtures {

// {mu, eta, gamma_l, gamma_r, omega, d1_plus, d1_minus, c1_plus, c1_minus}
inline const double trivial_coeffs[10][9] = {
    {-1.1908748390272725, 1.5099309219486400, 0.22361638716713910, 0.15823339266579470, 1.8529204104568170, 8.0681843838217239, 209.12508278432145, 0.091183080388412224, 0.0035179037132398163},
    {0.40843822470869860, 0.44818217621365410, 1.1686843942143805, 0.53126880289122190, 2.8517135311979223, 1294.9831059330286, 242.25994531107304, 7.7379473730728807e-5, 0.00041362640901538373},
    {1.9240258594058979, 1.0535330265211158, 0.12017509899915554, 0.93263291703216010, 1.1526298136394110, 559.12418451344813, 2.0889864829316778, 0.00098780122435968092, 0.26438828520153512},
    {-0.29313921781689480, 0.34862304332512895, 0.61328323151555570, 0.10624275431362412, 3.1565550972826860, 544.31300755352036, 1670.9810705803578, 7.0728760777791809e-6, 2.3039509649335625e-6},
    {-1.3438954891416746, -1.1699816316109912, 0.75715314351182870, 0.76865308408531840, -2.4258258963799317, 2069.5653456387960, 5.4981228334974621, 0.0021077113078545604, 0.79337010347803382},
    {-1.5608044315221448, -1.4388754104880450, 0.40414579678426205, 0.090591412085461060, 3.5029189816846350, 1.3288603138141940, 11948.971203478411, 0.47238763234757483, 5.2534830545127154e-5},
    {0.44873587935242700, -1.3401522447777616, 0.62938320804883730, 0.16125792860965402, -2.8402871898198060, 33.099915963234734, 599.91525070479320, 0.039562696226620128, 0.0021828448582389862},
    {1.0622310344328070, 1.8050282801989388, 1.1687450014155047, 1.1628292768073216, -3.5880991362220227, 67.247518599314161, 5922.7281021840192, 0.85813475982505869, 0.0097433872071172539},
    {-0.68774573293320840, 0.30788967352499635, 0.66081841266000750, 0.88350414866518740, 2.9618133420244570, 161.48882011759596, 2513.5277975927716, 0.00012995373045600116, 8.3492510491900176e-6},
    {0.37246977122036373, -1.6620191727071616, 0.15875560578452647, 0.65683883166744220, -3.1962124001836987, 61.897289316551376, 709.35348250761370, 0.051418614257360101, 0.0044867233634957324},
};

// {mu, delta, gamma_l, gamma_r, omega, d2_plus, d2_minus, c2_plus, c2_minus}
inline const double pairing3_coeffs[10][9] = {
    {-1.1936685372884260, 0.86457242415606150, 0.49366654211525530, 0.74725995871664190, 0.68565089099404730, 4.7657376262781268, 23.966131368698350, 0.17299788193418495, 0.034401151463142652},
    {0.90671925324265600, -0.41139348345462234, 0.29845282049195787, 0.066339781475148570, 2.5800422552734740, 370.23065212727757, 87.582775538216721, 6.1272694046818757e-6, 2.5901245233602194e-5},
    {-1.5724628275026964, 0.55416267998293440, 0.73597164109188310, 0.93960779995585030, 2.2682681811766425, 17.205203789109467, 70.821085686718543, 0.015162016449044469, 0.0036834451255604161},
    {0.98311654249644940, -0.40743277062525040, 1.1638419028751303, 0.94067166469330070, -3.8296498992919290, 1885.9156284624851, 4559.0112568671588, 6.3987274557271282e-5, 2.6469467678656817e-5},
    {-0.27214939236165403, -0.76750307232963210, 0.82923397018949920, 1.1834524483323487, 1.5009669184760543, 10.498680000489250, 10.561364835694262, 0.12973993640194494, 0.12896989136899820},
    {-1.7321616664079986, -1.4613184598870161, 0.56654356795319370, 0.74234946485049520, -3.1646800723961466, 205.50047131596453, 44.289704900094968, 0.037330891727977386, 0.17321216887873518},
    {0.27355652946994136, 0.61183977300231720, 1.1781960795752517, 0.99799350219287960, -1.9446371432084772, 58.043682906169269, 73.721176298570844, 0.011355366031610635, 0.0089405418946777007},
    {0.35957882753134520, 1.4165919164639011, 0.28968533532100843, 0.59110265774689840, -2.9979457935767755, 185.44849916103159, 286.53838045846330, 0.014873224317067583, 0.0096259953827908736},
    {-0.81278244447252710, 0.90282840666220810, 1.1413900845805638, 0.052609082415530280, -3.6220398092648480, 2483.1980753510489, 1102.4976885569683, 6.4263490696395129e-5, 0.00014474313920920539},
    {-1.5286433902843655, -1.6622004470217957, 0.71190209645349080, 0.59735225045866750, -0.15044930207859686, 202.38759809387472, 146.01062698144909, 0.064159423088818874, 0.088932372954500887},
};

// {mu, delta, gamma_l, gamma_r, omega, d2p_plus, d2p_minus, c2p_plus, c2p_minus}
inline const double pairing4_coeffs[10][9] = {
    {1.7736310418919520, 1.1180328158583400, 0.18365332583886884, 0.11451376284806950, -1.0903611691137343, 167.76056958710092, 164.59289350996908, 0.00097938599138427939, 0.00099823478557598075},
    {-1.3437844289231897, -0.91988507572006470, 0.97836510277815890, 0.11229452359437730, -2.7821256785140830, 475.45513103808867, 729.65102816129511, 0.00056003016558779886, 0.00036492680128995651},
    {-1.2677989092205553, -1.7995547631351790, 1.1746274837708026, 0.16471259470196380, 3.5690424615646340, 1406.4501195344750, 876.19833313932452, 0.018687578430292781, 0.029996800864623271},
    {1.0587208057721131, -1.6983200313390120, 0.50998798873201390, 0.42628751385476554, 1.4629272795211454, 37.909543749004136, 48.860644621783205, 0.55041617233437078, 0.42705179448178365},
    {-1.2096568382957225, -1.8295624646392674, 0.70370791915177640, 0.29373213439360030, 0.45834617958559940, 749.60851136156934, 692.32189924433659, 0.041366886227223206, 0.044789815313220941},
    {-0.43483424351278810, 1.1968284887513210, 0.18037521678626078, 0.29110504467013380, -3.2865346339953385, 4857.2991679102765, 4839.3862781335663, 0.00012708176739716475, 0.00012755215797175076},
    {-0.70960802898822500, 0.71651231312322630, 0.41614933462164820, 0.21799845985781652, -1.7898892679600245, 12.992193133261102, 14.779834651856448, 0.0037793934125761932, 0.0033222705327489597},
    {1.9349227077144167, 0.98831020972295150, 0.21066567721748597, 0.78170169857752380, 3.5667051324815287, 3972.0877544681840, 3200.3156699097761, 0.00015453814227274668, 0.00019180578600146171},
    {-0.62538393693197140, 0.26713111184526000, 0.29588345964416830, 1.1387972290258868, -1.6752668175576328, 64.903602560079772, 38.727094477594525, 7.5457968379072698e-6, 1.2646169447335729e-5},
    {-1.9603995054936570, 0.22267064909781095, 0.31450949107049800, 1.0493713998432840, -0.53355612656938600, 269.83963328698587, 213.73860692434401, 5.9634156870647182e-7, 7.5286628152535442e-7},
};

// {gamma_l, omega, d3, c3}
inline const double majorana_coeffs[10][4] = {
    {0.53334658481876450, -1.0261192395296836, 12.016070265460166, 0.37877086036090479},
    {0.24133603421920258, -0.57500768349332180, 5.2434239307155300, 0.17772534033410991},
    {1.1262267288423524, -3.2428030588359418, 657.47760992974696, 0.030866733725444446},
    {0.71629673466239610, 0.19338107673635374, 8.6542818110091556, 0.94858202825855407},
    {0.71323348059208280, -3.6122689917259850, 1199.9863193782509, 0.0067827706315994774},
    {0.16108405718068253, 0.32613401461345680, 2.0062607587917887, 0.20693679713630733},
    {0.85917292590230090, 3.6724241714532333, 1421.8198803281903, 0.0083068537928518074},
    {0.40021913838129230, 3.6168064497690313, 1119.7658565226414, 0.0022886978779521347},
    {0.065305779117726360, -2.1418589505580740, 1.6750595359999046, 0.040737367903785429},
    {0.14127459070937376, -1.1041464885949050, 9.6123242556728052, 0.033221534270773055},
};

// {gamma_l, gamma_r, omega, d4, c41, c42, c43, c44, b4}
inline const double general3_coeffs[10][9] = {
    {0.052137046068913145, 0.62900805552011050, 2.8865813202129162, 3558.1287793136925, 0.034536551074544685, 0.0020773635598394842, 0.0088113723466985248, 0.0081423153921847329, 0.0016540709250314906},
    {0.79810558230545180, 0.89436727685399320, 2.7048052163123577, 5968.6582611982093, 0.39919172298685865, 0.025128505967625209, 0.10185593450007983, 0.098483133481967168, 0.18310370198970380},
    {0.19982177732146444, 0.38210418102526400, -3.5131209470801420, 311347.34976575038, 0.00016114446496466362, 0.0016427059857419838, 0.00051158657322880525, 0.00051743534920383926, 0.0014395591874043803},
    {0.14483815652687076, 0.38494686917841214, -0.31412337848902805, 12.431249988937229, 0.021814532261391939, 0.23519634834682597, 0.066123194310963856, 0.077593019850867868, 0.12578704962147941},
    {0.35520994543354530, 0.46715066044207780, -2.8076474278041346, 1854.7372168251094, 0.016934253665955395, 0.30807622395610203, 0.071492926109269566, 0.072972826947222820, 0.093804392443787474},
    {0.49810362398155260, 0.62631812772516640, -2.4938975205774376, 1155.9180667289485, 0.028099285655874637, 0.67767708284304410, 0.13492341170124637, 0.14113371203072396, 0.11055931532170445},
    {0.32305450712281470, 0.94086013288129180, -2.7230690099506080, 2589.0150931931603, 0.022249903106285475, 0.38684223714757395, 0.085130151842398189, 0.10110638954206000, 0.078160688120161096},
    {0.45979414276037410, 0.78507313648172060, -2.5284999394501550, 1417.5617871662676, 0.030648974296054445, 0.67407565164609670, 0.13563382509475167, 0.15231987527052935, 0.12275491784658065},
    {0.98357603613462890, 0.12127555610365914, -3.6922685998132385, 981847.88642821443, 0.00011598995273988411, 0.00098435914705343521, 0.00035185116741704919, 0.00032450019075954364, 0.016088168265018020},
    {0.64449627476527500, 0.44658792041533300, 1.6118891184738030, 504.03706559915144, 0.46428851145178518, 0.0041408620076541788, 0.037945611640114492, 0.050666060568346883, 0.23557508190681628},
};

// {case_id, n_sites, mu, eta, delta, gamma_l, gamma_r, mu_l, mu_r, beta, xi, omega, re_z, im_z}
inline const double analytic_cf_values[30][14] = {
    {0.0, 3.0000000000000000, 0.51116353820281320, 0.86429579269234180, 0.0, 0.40370875608911350, 0.60793265819757600, 0.078108242457293310, 0.59219447557871150, 7.8205196857915500, 2.8557782209835056, -1.6058026402797978, 0.99998805410041013, -1.6582639534729513e-6},
    {0.0, 3.0000000000000000, -1.5516112783562024, 0.27801778264687904, 0.0, 0.97159188418277700, 0.78677144131910740, -0.035112950806095890, -0.10091207154695025, 3.0789629329417796, 4.2130104179583280, -0.66202121109842870, 0.99700682867159405, -0.00017936100624002359},
    {0.0, 3.0000000000000000, 1.5612060871195550, 0.48249953724697914, 0.0, 0.34237301335209086, 0.68157819845919470, 0.31853750786554780, -0.35446905429083053, 9.8354832088022200, 1.0887981207062534, -2.5299364049154445, 0.99999999997593515, 3.9642743450871169e-11},
    {0.0, 3.0000000000000000, 0.35831505159762944, 1.4805151217987778, 0.0, 0.20196121857407584, 0.87864988176903860, -0.34437554277668560, -0.13301327289691700, 5.3800213486335010, 5.2720863364241675, -3.0667958798912025, 0.99999998936859703, 9.8780403826316500e-9},
    {0.0, 3.0000000000000000, -0.95250007697223140, 1.3612469130581382, 0.0, 0.20447208597146752, 0.54517082647116020, -0.16602294417562674, -0.25049391257968295, 5.4682473584132640, 6.1643693261452020, 0.52317594943735910, 0.99942277805557469, -0.0021995631915641832},
    {0.0, 3.0000000000000000, 0.11546595642341329, 1.6948338436637893, 0.0, 0.94854019530347570, 0.80864142990479860, -0.53387929831990190, -0.0030655293283734510, 1.5848601605069201, 0.86503313617274770, -3.1922099441294380, 0.99895748654195477, -0.00089728073384688852},
    {1.0000000000000000, 3.0000000000000000, 1.5056119012266769, 0.0, 1.1618911951273276, 0.98613494585289970, 0.20712834884156100, 0.071139571527308990, 0.39951123281224443, 6.4711893874247854, 0.83893355195785550, -2.1670181880716637, 0.99999785659446261, -3.7808898824701786e-6},
    {1.0000000000000000, 3.0000000000000000, -1.3593061926733152, 0.0, 0.80315411493901470, 0.41584276973197287, 0.88356169105639590, -0.0036224160555567986, -0.099203977282807610, 4.0350803314825650, 4.8387135390361810, 0.20967252621262755, 0.98097684090791027, -0.0040926749273146070},
    {1.0000000000000000, 3.0000000000000000, -1.1955848209900592, 0.0, 1.7306106611630565, 0.86428702056945250, 0.43567828349473314, -0.13038922259935610, -0.14641774459442570, 1.0841208193162837, 5.3977835079132600, 2.2421302571593590, 0.94618955029856649, -0.00097733219787686650},
    {1.0000000000000000, 3.0000000000000000, -1.5254276375762923, 0.0, 1.6459281978340299, 0.38026166986716470, 0.29117803127261027, -0.58029189910026320, -0.29639853703724610, 7.2153530221444020, 2.5792104047591384, 0.29974433157963710, 0.98411060353920166, -0.0035378503949810515},
    {1.0000000000000000, 3.0000000000000000, -0.25702958615932525, 0.0, 0.98529832067807030, 0.57715044665957040, 0.59323592285345640, -0.097339918190330720, 0.19840866242132993, 2.9909041358937833, 5.7779981240171160, 0.55561027439284330, 0.94688497859148097, 0.082376136633074229},
    {1.0000000000000000, 3.0000000000000000, 1.1708391636203932, 0.0, 0.35398949136327130, 0.47599548235447140, 0.37238136093963337, -0.12030398411024618, 0.33053337306197040, 1.5043761963125033, 0.58291828033029400, 0.67095511457769770, 0.99903580670017358, -0.0010496526775737486},
    {2.0000000000000000, 4.0000000000000000, 1.3975337894895960, 0.0, 1.0295479813047705, 0.90502070058236180, 0.87199251339842050, -0.42206565540912344, 0.51527700852085940, 4.4012989222204340, 0.78326456437009020, -3.3042456642810496, 0.99999999774120187, 1.1065028146937282e-9},
    {2.0000000000000000, 4.0000000000000000, -0.93827454731314310, 0.0, 1.3058658339649734, 0.56396665766933700, 0.11059535112430640, -0.19854825722291752, -0.35258559267167290, 7.9559968751435400, 2.3585664933508412, 1.0942978870846858, 0.99906059221624346, -0.00037816158013297247},
    {2.0000000000000000, 4.0000000000000000, 1.2202358079455728, 0.0, 1.8346942597914433, 0.14079663005742013, 0.81392054521060010, 0.34145887082299010, -0.33553473173087567, 6.7351481265710680, 3.8247062534365517, -3.4092181614703980, 0.99999999978851204, -1.4996749863100555e-12},
    {2.0000000000000000, 4.0000000000000000, -1.2584450519156070, 0.0, 1.5046739128931720, 0.33122401897665140, 0.10804981179280986, -0.48177566448732856, 0.37036758104837740, 2.8885654716370220, 5.6149492888773260, 1.5202735776835787, 0.98956270733386507, 0.0047955357682105928},
    {2.0000000000000000, 4.0000000000000000, -1.3143087281761998, 0.0, 1.7446673365103684, 0.33865623736724604, 0.98909821345577080, -0.55572671879511390, -0.33559725470392215, 7.7954201822733310, 1.1088021141306310, -3.8935078964934142, 0.99999999999997874, -3.4277394640416961e-14},
    {2.0000000000000000, 4.0000000000000000, -1.4176828193571200, 0.0, 1.6616073149278394, 0.43136839401360705, 0.68999076728231320, 0.54771037115385010, 0.53496407862956790, 4.2584910769622000, 1.3636012659951031, -0.85114319803043160, 0.98277195490030695, 0.020590187798090862},
    {3.0000000000000000, 3.0000000000000000, 0.0, 1.0000000000000000, 1.0000000000000000, 0.69461558408741420, 0.90048904941800200, 0.23048119168903170, -0.48006356364676034, 2.1366551668621290, 1.3965322767104515, -3.5834651643813658, 0.99998585497028450, 1.1359573210284664e-6},
    {3.0000000000000000, 3.0000000000000000, 0.0, 1.0000000000000000, 1.0000000000000000, 0.86053116243364890, 0.11502331434966630, 0.074327529002252040, -0.34236141706996254, 5.2080750211325240, 1.8873009652055115, -2.4330998944557400, 0.99999731124578571, -3.2482080620228724e-7},
    {3.0000000000000000, 3.0000000000000000, 0.0, 1.0000000000000000, 1.0000000000000000, 0.76666840221063670, 0.15981247909057490, 0.22020158330378847, -0.099603765357394900, 6.2891012135667690, 3.1622365908758910, -3.3497119350174804, 0.99999999999996520, 1.4864817226093973e-12},
    {3.0000000000000000, 3.0000000000000000, 0.0, 1.0000000000000000, 1.0000000000000000, 0.19130106052147075, 0.61071134711280260, -0.33850035322960664, 0.12644952459538594, 5.5212133758032380, 4.7414496271750190, -1.8855802289581796, 0.99980148164549428, 5.5023431931427341e-6},
    {3.0000000000000000, 3.0000000000000000, 0.0, 1.0000000000000000, 1.0000000000000000, 0.64295476258029340, 0.78569763961854690, -0.18358943132062450, 0.19465440657637190, 2.9392708344914660, 2.7273500745981174, 3.4492326604226173, 0.99999976490739581, 2.6343890293731006e-7},
    {3.0000000000000000, 3.0000000000000000, 0.0, 1.0000000000000000, 1.0000000000000000, 0.20604236069162463, 0.81102289807113500, 0.35769924141878220, -0.35555920195014770, 3.5825706204093835, 4.7305889477659700, 2.5128363317184608, 0.99998186589787752, -2.8283579051729024e-7},
    {4.0000000000000000, 3.0000000000000000, 1.0000000000000000, 1.0000000000000000, 1.0000000000000000, 0.21928885012713200, 0.52726668071018290, -0.10120403135328804, -0.34682437417349826, 7.1666701346373870, 1.0241405307372102, -1.2693027864493880, 0.99989044869937937, 0.00010338726964652004},
    {4.0000000000000000, 3.0000000000000000, 1.0000000000000000, 1.0000000000000000, 1.0000000000000000, 0.45524565834954656, 0.78664159959214450, 0.19194297422482176, 0.28524741819385870, 6.6698432366157320, 3.9148802927942263, 3.9781018803802732, 0.99999999999994185, 1.4333042784806547e-14},
    {4.0000000000000000, 3.0000000000000000, 1.0000000000000000, 1.0000000000000000, 1.0000000000000000, 0.60549480674131900, 0.78592184247486300, 0.31172536246927040, 0.24874615553463097, 9.8820650624995530, 5.6128287108692490, -0.62269624331815270, 0.98692326743215698, -0.017562409394236075},
    {4.0000000000000000, 3.0000000000000000, 1.0000000000000000, 1.0000000000000000, 1.0000000000000000, 0.46047411863121224, 0.66876286162845200, 0.42990761553822300, -0.017090977231957516, 1.9903461098969440, 3.0290502749797836, 3.6152970586345960, 0.99998106727292275, -1.2797164595275953e-6},
    {4.0000000000000000, 3.0000000000000000, 1.0000000000000000, 1.0000000000000000, 1.0000000000000000, 0.35773379463983757, 0.71111692851523740, 0.085452295442335240, 0.49702054441285180, 6.4594180563586026, 3.2168825901130480, 0.62828931804780290, 0.96724518673209703, -0.00019960585873956455},
    {4.0000000000000000, 3.0000000000000000, 1.0000000000000000, 1.0000000000000000, 1.0000000000000000, 0.48238469290353900, 0.72929539744294390, 0.47625510831692763, 0.39142003117479920, 3.4956522544844364, 1.0493081938767960, -1.6361886426288867, 0.99493739853872470, 0.0034377340027387477},
};

} // namespace fixtures
