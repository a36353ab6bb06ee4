"""Vendored wavelet filter banks (dec_lo, dec_hi, rec_lo, rec_hi).

Generated by tools/gen_wavelet_filters.py from the defining equations of
each family. Do not edit by hand; rerun the generator instead.
"""

FILTER_BANKS = {
    'bior1.1': (
        (7.071067811865475727e-01, 7.071067811865475727e-01,),
        (7.071067811865475727e-01, -7.071067811865475727e-01,),
        (7.071067811865475727e-01, 7.071067811865475727e-01,),
        (-7.071067811865475727e-01, 7.071067811865475727e-01,),
    ),
    'bior2.2': (
        (-1.767766952966368932e-01, 3.535533905932737864e-01, 1.060660171779821415e+00, 3.535533905932737864e-01, -1.767766952966368932e-01, 0.000000000000000000e+00,),
        (-0.000000000000000000e+00, 0.000000000000000000e+00, -3.535533905932737864e-01, 7.071067811865475727e-01, -3.535533905932737864e-01, 0.000000000000000000e+00,),
        (0.000000000000000000e+00, 0.000000000000000000e+00, 3.535533905932737864e-01, 7.071067811865475727e-01, 3.535533905932737864e-01, 0.000000000000000000e+00,),
        (-1.767766952966368932e-01, -3.535533905932737864e-01, 1.060660171779821415e+00, -3.535533905932737864e-01, -1.767766952966368932e-01, -0.000000000000000000e+00,),
    ),
    'bior3.1': (
        (-3.535533905932737864e-01, 1.060660171779821415e+00, 1.060660171779821415e+00, -3.535533905932737864e-01,),
        (1.767766952966368932e-01, -5.303300858899107073e-01, 5.303300858899107073e-01, -1.767766952966368932e-01,),
        (1.767766952966368932e-01, 5.303300858899107073e-01, 5.303300858899107073e-01, 1.767766952966368932e-01,),
        (3.535533905932737864e-01, 1.060660171779821415e+00, -1.060660171779821415e+00, -3.535533905932737864e-01,),
    ),
    'bior3.3': (
        (6.629126073623883841e-02, -1.988737822087165152e-01, -1.546796083845572711e-01, 9.943689110435824929e-01, 9.943689110435824929e-01, -1.546796083845572711e-01, -1.988737822087165152e-01, 6.629126073623883841e-02,),
        (0.000000000000000000e+00, -0.000000000000000000e+00, 1.767766952966368932e-01, -5.303300858899107073e-01, 5.303300858899107073e-01, -1.767766952966368932e-01, 0.000000000000000000e+00, -0.000000000000000000e+00,),
        (0.000000000000000000e+00, 0.000000000000000000e+00, 1.767766952966368932e-01, 5.303300858899107073e-01, 5.303300858899107073e-01, 1.767766952966368932e-01, 0.000000000000000000e+00, 0.000000000000000000e+00,),
        (-6.629126073623883841e-02, -1.988737822087165152e-01, 1.546796083845572711e-01, 9.943689110435824929e-01, -9.943689110435824929e-01, -1.546796083845572711e-01, 1.988737822087165152e-01, 6.629126073623883841e-02,),
    ),
    'bior3.9': (
        (-6.797443727836990131e-04, 2.039233118351096823e-03, 5.060319219611981133e-03, -2.061891264110553637e-02, -1.411278793017584597e-02, 9.913478249423215982e-02, 1.230013626941931469e-02, -3.201919683607785672e-01, 2.050022711569885782e-03, 9.421257006782067789e-01, 9.421257006782067789e-01, 2.050022711569885782e-03, -3.201919683607785672e-01, 1.230013626941931469e-02, 9.913478249423215982e-02, -1.411278793017584597e-02, -2.061891264110553637e-02, 5.060319219611981133e-03, 2.039233118351096823e-03, -6.797443727836990131e-04,),
        (0.000000000000000000e+00, -0.000000000000000000e+00, 0.000000000000000000e+00, -0.000000000000000000e+00, 0.000000000000000000e+00, -0.000000000000000000e+00, 0.000000000000000000e+00, -0.000000000000000000e+00, 1.767766952966368932e-01, -5.303300858899107073e-01, 5.303300858899107073e-01, -1.767766952966368932e-01, 0.000000000000000000e+00, -0.000000000000000000e+00, 0.000000000000000000e+00, -0.000000000000000000e+00, 0.000000000000000000e+00, -0.000000000000000000e+00, 0.000000000000000000e+00, -0.000000000000000000e+00,),
        (0.000000000000000000e+00, 0.000000000000000000e+00, 0.000000000000000000e+00, 0.000000000000000000e+00, 0.000000000000000000e+00, 0.000000000000000000e+00, 0.000000000000000000e+00, 0.000000000000000000e+00, 1.767766952966368932e-01, 5.303300858899107073e-01, 5.303300858899107073e-01, 1.767766952966368932e-01, 0.000000000000000000e+00, 0.000000000000000000e+00, 0.000000000000000000e+00, 0.000000000000000000e+00, 0.000000000000000000e+00, 0.000000000000000000e+00, 0.000000000000000000e+00, 0.000000000000000000e+00,),
        (6.797443727836990131e-04, 2.039233118351096823e-03, -5.060319219611981133e-03, -2.061891264110553637e-02, 1.411278793017584597e-02, 9.913478249423215982e-02, -1.230013626941931469e-02, -3.201919683607785672e-01, -2.050022711569885782e-03, 9.421257006782067789e-01, -9.421257006782067789e-01, 2.050022711569885782e-03, 3.201919683607785672e-01, 1.230013626941931469e-02, -9.913478249423215982e-02, -1.411278793017584597e-02, 2.061891264110553637e-02, 5.060319219611981133e-03, -2.039233118351096823e-03, -6.797443727836990131e-04,),
    ),
    'bior4.4': (
        (3.782845550699538706e-02, -2.384946501938008806e-02, -1.106244044184234443e-01, 3.774028556126538536e-01, 8.526986790094035484e-01, 3.774028556126538536e-01, -1.106244044184234443e-01, -2.384946501938008806e-02, 3.782845550699538706e-02, 0.000000000000000000e+00,),
        (-0.000000000000000000e+00, 0.000000000000000000e+00, 6.453888262893851813e-02, -4.068941760955854109e-02, -4.180922732222123184e-01, 7.884856164056646133e-01, -4.180922732222123184e-01, -4.068941760955854109e-02, 6.453888262893851813e-02, 0.000000000000000000e+00,),
        (0.000000000000000000e+00, 0.000000000000000000e+00, -6.453888262893851813e-02, -4.068941760955854109e-02, 4.180922732222123184e-01, 7.884856164056646133e-01, 4.180922732222123184e-01, -4.068941760955854109e-02, -6.453888262893851813e-02, 0.000000000000000000e+00,),
        (3.782845550699538706e-02, 2.384946501938008806e-02, -1.106244044184234443e-01, -3.774028556126538536e-01, 8.526986790094035484e-01, -3.774028556126538536e-01, -1.106244044184234443e-01, 2.384946501938008806e-02, 3.782845550699538706e-02, -0.000000000000000000e+00,),
    ),
    'coif1': (
        (-7.273261951252645019e-02, 3.378976624574817622e-01, 8.525720202116003898e-01, 3.848648468648577237e-01, -7.273261951252645019e-02, -1.565572813579199293e-02,),
        (1.565572813579199293e-02, -7.273261951252645019e-02, -3.848648468648577237e-01, 8.525720202116003898e-01, -3.378976624574817622e-01, -7.273261951252645019e-02,),
        (-1.565572813579199293e-02, -7.273261951252645019e-02, 3.848648468648577237e-01, 8.525720202116003898e-01, 3.378976624574817622e-01, -7.273261951252645019e-02,),
        (-7.273261951252645019e-02, -3.378976624574817622e-01, 8.525720202116003898e-01, -3.848648468648577237e-01, -7.273261951252645019e-02, 1.565572813579199293e-02,),
    ),
    'coif2': (
        (1.638733646320364098e-02, -4.146493678687177692e-02, -6.737255472372559451e-02, 3.861100668227628319e-01, 8.127236354494135062e-01, 4.170051844232390281e-01, -7.648859907828076121e-02, -5.943441864643108502e-02, 2.368017194684777019e-02, 5.611434819368834280e-03, -1.823208870911032084e-03, -7.205494455203469758e-04,),
        (7.205494455203469758e-04, -1.823208870911032084e-03, -5.611434819368834280e-03, 2.368017194684777019e-02, 5.943441864643108502e-02, -7.648859907828076121e-02, -4.170051844232390281e-01, 8.127236354494135062e-01, -3.861100668227628319e-01, -6.737255472372559451e-02, 4.146493678687177692e-02, 1.638733646320364098e-02,),
        (-7.205494455203469758e-04, -1.823208870911032084e-03, 5.611434819368834280e-03, 2.368017194684777019e-02, -5.943441864643108502e-02, -7.648859907828076121e-02, 4.170051844232390281e-01, 8.127236354494135062e-01, 3.861100668227628319e-01, -6.737255472372559451e-02, -4.146493678687177692e-02, 1.638733646320364098e-02,),
        (1.638733646320364098e-02, 4.146493678687177692e-02, -6.737255472372559451e-02, -3.861100668227628319e-01, 8.127236354494135062e-01, -4.170051844232390281e-01, -7.648859907828076121e-02, 5.943441864643108502e-02, 2.368017194684777019e-02, -5.611434819368834280e-03, -1.823208870911032084e-03, 7.205494455203469758e-04,),
    ),
    'coif3': (
        (-3.793512864380801496e-03, 7.782596425672745448e-03, 2.345269614207716458e-02, -6.577191128146936405e-02, -6.112339000297253855e-02, 4.051769024091181892e-01, 7.937772226260871866e-01, 4.284834763773699984e-01, -7.179982161915483829e-02, -8.230192710629981312e-02, 3.455502757329773078e-02, 1.588054486366945184e-02, -9.007976136730624223e-03, -2.574517688136796802e-03, 1.117518770830630299e-03, 4.662169598204028817e-04, -7.098330250637900380e-05, -3.459977319727277381e-05,),
        (3.459977319727277381e-05, -7.098330250637900380e-05, -4.662169598204028817e-04, 1.117518770830630299e-03, 2.574517688136796802e-03, -9.007976136730624223e-03, -1.588054486366945184e-02, 3.455502757329773078e-02, 8.230192710629981312e-02, -7.179982161915483829e-02, -4.284834763773699984e-01, 7.937772226260871866e-01, -4.051769024091181892e-01, -6.112339000297253855e-02, 6.577191128146936405e-02, 2.345269614207716458e-02, -7.782596425672745448e-03, -3.793512864380801496e-03,),
        (-3.459977319727277381e-05, -7.098330250637900380e-05, 4.662169598204028817e-04, 1.117518770830630299e-03, -2.574517688136796802e-03, -9.007976136730624223e-03, 1.588054486366945184e-02, 3.455502757329773078e-02, -8.230192710629981312e-02, -7.179982161915483829e-02, 4.284834763773699984e-01, 7.937772226260871866e-01, 4.051769024091181892e-01, -6.112339000297253855e-02, -6.577191128146936405e-02, 2.345269614207716458e-02, 7.782596425672745448e-03, -3.793512864380801496e-03,),
        (-3.793512864380801496e-03, -7.782596425672745448e-03, 2.345269614207716458e-02, 6.577191128146936405e-02, -6.112339000297253855e-02, -4.051769024091181892e-01, 7.937772226260871866e-01, -4.284834763773699984e-01, -7.179982161915483829e-02, 8.230192710629981312e-02, 3.455502757329773078e-02, -1.588054486366945184e-02, -9.007976136730624223e-03, 2.574517688136796802e-03, 1.117518770830630299e-03, -4.662169598204028817e-04, -7.098330250637900380e-05, 3.459977319727277381e-05,),
    ),
    'coif4': (
        (8.923139025370029715e-04, -1.629492425226785821e-03, -7.346167936268049869e-03, 1.606894713157502527e-02, 2.668230466960483382e-02, -8.126671024919372710e-02, -5.607731960356925754e-02, 4.153084270006822676e-01, 7.822389344242826059e-01, 4.343860331143565290e-01, -6.662747236681715313e-02, -9.622042453595264222e-02, 3.933442260558914910e-02, 2.508225333794960807e-02, -1.521172818769721095e-02, -5.658283800130883487e-03, 3.751434697146086190e-03, 1.266561078925660310e-03, -5.890202246332164283e-04, -2.599743371222568156e-04, 6.233885431278717807e-05, 3.122986159919526473e-05, -3.259647940030750619e-06, -1.784990914493346642e-06,),
        (1.784990914493346642e-06, -3.259647940030750619e-06, -3.122986159919526473e-05, 6.233885431278717807e-05, 2.599743371222568156e-04, -5.890202246332164283e-04, -1.266561078925660310e-03, 3.751434697146086190e-03, 5.658283800130883487e-03, -1.521172818769721095e-02, -2.508225333794960807e-02, 3.933442260558914910e-02, 9.622042453595264222e-02, -6.662747236681715313e-02, -4.343860331143565290e-01, 7.822389344242826059e-01, -4.153084270006822676e-01, -5.607731960356925754e-02, 8.126671024919372710e-02, 2.668230466960483382e-02, -1.606894713157502527e-02, -7.346167936268049869e-03, 1.629492425226785821e-03, 8.923139025370029715e-04,),
        (-1.784990914493346642e-06, -3.259647940030750619e-06, 3.122986159919526473e-05, 6.233885431278717807e-05, -2.599743371222568156e-04, -5.890202246332164283e-04, 1.266561078925660310e-03, 3.751434697146086190e-03, -5.658283800130883487e-03, -1.521172818769721095e-02, 2.508225333794960807e-02, 3.933442260558914910e-02, -9.622042453595264222e-02, -6.662747236681715313e-02, 4.343860331143565290e-01, 7.822389344242826059e-01, 4.153084270006822676e-01, -5.607731960356925754e-02, -8.126671024919372710e-02, 2.668230466960483382e-02, 1.606894713157502527e-02, -7.346167936268049869e-03, -1.629492425226785821e-03, 8.923139025370029715e-04,),
        (8.923139025370029715e-04, 1.629492425226785821e-03, -7.346167936268049869e-03, -1.606894713157502527e-02, 2.668230466960483382e-02, 8.126671024919372710e-02, -5.607731960356925754e-02, -4.153084270006822676e-01, 7.822389344242826059e-01, -4.343860331143565290e-01, -6.662747236681715313e-02, 9.622042453595264222e-02, 3.933442260558914910e-02, -2.508225333794960807e-02, -1.521172818769721095e-02, 5.658283800130883487e-03, 3.751434697146086190e-03, -1.266561078925660310e-03, -5.890202246332164283e-04, 2.599743371222568156e-04, 6.233885431278717807e-05, -3.122986159919526473e-05, -3.259647940030750619e-06, 1.784990914493346642e-06,),
    ),
    'db1': (
        (7.071067811865475727e-01, 7.071067811865475727e-01,),
        (-7.071067811865475727e-01, 7.071067811865475727e-01,),
        (7.071067811865475727e-01, 7.071067811865475727e-01,),
        (7.071067811865475727e-01, -7.071067811865475727e-01,),
    ),
    'db10': (
        (2.667005790055555423e-02, 1.881768000776914973e-01, 5.272011889317256284e-01, 6.884590394536036495e-01, 2.811723436605774729e-01, -2.498464243273154084e-01, -1.959462743773770499e-01, 1.273693403357932519e-01, 9.305736460357236228e-02, -7.139414716639709557e-02, -2.945753682187581685e-02, 3.321267405934100192e-02, 3.606553566956170135e-03, -1.073317548333057453e-02, 1.395351747052901064e-03, 1.992405295185056130e-03, -6.858566949597116186e-04, -1.164668551292854490e-04, 9.358867032006959192e-05, -1.326420289452124428e-05,),
        (1.326420289452124428e-05, 9.358867032006959192e-05, 1.164668551292854490e-04, -6.858566949597116186e-04, -1.992405295185056130e-03, 1.395351747052901064e-03, 1.073317548333057453e-02, 3.606553566956170135e-03, -3.321267405934100192e-02, -2.945753682187581685e-02, 7.139414716639709557e-02, 9.305736460357236228e-02, -1.273693403357932519e-01, -1.959462743773770499e-01, 2.498464243273154084e-01, 2.811723436605774729e-01, -6.884590394536036495e-01, 5.272011889317256284e-01, -1.881768000776914973e-01, 2.667005790055555423e-02,),
        (-1.326420289452124428e-05, 9.358867032006959192e-05, -1.164668551292854490e-04, -6.858566949597116186e-04, 1.992405295185056130e-03, 1.395351747052901064e-03, -1.073317548333057453e-02, 3.606553566956170135e-03, 3.321267405934100192e-02, -2.945753682187581685e-02, -7.139414716639709557e-02, 9.305736460357236228e-02, 1.273693403357932519e-01, -1.959462743773770499e-01, -2.498464243273154084e-01, 2.811723436605774729e-01, 6.884590394536036495e-01, 5.272011889317256284e-01, 1.881768000776914973e-01, 2.667005790055555423e-02,),
        (2.667005790055555423e-02, -1.881768000776914973e-01, 5.272011889317256284e-01, -6.884590394536036495e-01, 2.811723436605774729e-01, 2.498464243273154084e-01, -1.959462743773770499e-01, -1.273693403357932519e-01, 9.305736460357236228e-02, 7.139414716639709557e-02, -2.945753682187581685e-02, -3.321267405934100192e-02, 3.606553566956170135e-03, 1.073317548333057453e-02, 1.395351747052901064e-03, -1.992405295185056130e-03, -6.858566949597116186e-04, 1.164668551292854490e-04, 9.358867032006959192e-05, 1.326420289452124428e-05,),
    ),
    'db2': (
        (4.829629131445341561e-01, 8.365163037378078315e-01, 2.241438680420133889e-01, -1.294095225512603697e-01,),
        (1.294095225512603697e-01, 2.241438680420133889e-01, -8.365163037378078315e-01, 4.829629131445341561e-01,),
        (-1.294095225512603697e-01, 2.241438680420133889e-01, 8.365163037378078315e-01, 4.829629131445341561e-01,),
        (4.829629131445341561e-01, -8.365163037378078315e-01, 2.241438680420133889e-01, 1.294095225512603697e-01,),
    ),
    'db3': (
        (3.326705529500826874e-01, 8.068915093110926584e-01, 4.598775021184917100e-01, -1.350110200102546121e-01, -8.544127388202668594e-02, 3.522629188570954722e-02,),
        (-3.522629188570954722e-02, -8.544127388202668594e-02, 1.350110200102546121e-01, 4.598775021184917100e-01, -8.068915093110926584e-01, 3.326705529500826874e-01,),
        (3.522629188570954722e-02, -8.544127388202668594e-02, -1.350110200102546121e-01, 4.598775021184917100e-01, 8.068915093110926584e-01, 3.326705529500826874e-01,),
        (3.326705529500826874e-01, -8.068915093110926584e-01, 4.598775021184917100e-01, 1.350110200102546121e-01, -8.544127388202668594e-02, -3.522629188570954722e-02,),
    ),
    'db4': (
        (2.303778133088965341e-01, 7.148465705529157832e-01, 6.308807679298590321e-01, -2.798376941685985775e-02, -1.870348117190931136e-01, 3.084138183556076745e-02, 3.288301166688520349e-02, -1.059740178506903344e-02,),
        (1.059740178506903344e-02, 3.288301166688520349e-02, -3.084138183556076745e-02, -1.870348117190931136e-01, 2.798376941685985775e-02, 6.308807679298590321e-01, -7.148465705529157832e-01, 2.303778133088965341e-01,),
        (-1.059740178506903344e-02, 3.288301166688520349e-02, 3.084138183556076745e-02, -1.870348117190931136e-01, -2.798376941685985775e-02, 6.308807679298590321e-01, 7.148465705529157832e-01, 2.303778133088965341e-01,),
        (2.303778133088965341e-01, -7.148465705529157832e-01, 6.308807679298590321e-01, 2.798376941685985775e-02, -1.870348117190931136e-01, -3.084138183556076745e-02, 3.288301166688520349e-02, 1.059740178506903344e-02,),
    ),
    'db5': (
        (1.601023979741929282e-01, 6.038292697971897605e-01, 7.243085284377729360e-01, 1.384281459013207427e-01, -2.422948870663820531e-01, -3.224486958463838177e-02, 7.757149384004571879e-02, -6.241490212798275240e-03, -1.258075199908200055e-02, 3.335725285473771680e-03,),
        (-3.335725285473771680e-03, -1.258075199908200055e-02, 6.241490212798275240e-03, 7.757149384004571879e-02, 3.224486958463838177e-02, -2.422948870663820531e-01, -1.384281459013207427e-01, 7.243085284377729360e-01, -6.038292697971897605e-01, 1.601023979741929282e-01,),
        (3.335725285473771680e-03, -1.258075199908200055e-02, -6.241490212798275240e-03, 7.757149384004571879e-02, -3.224486958463838177e-02, -2.422948870663820531e-01, 1.384281459013207427e-01, 7.243085284377729360e-01, 6.038292697971897605e-01, 1.601023979741929282e-01,),
        (1.601023979741929282e-01, -6.038292697971897605e-01, 7.243085284377729360e-01, -1.384281459013207427e-01, -2.422948870663820531e-01, 3.224486958463838177e-02, 7.757149384004571879e-02, 6.241490212798275240e-03, -1.258075199908200055e-02, -3.335725285473771680e-03,),
    ),
    'db6': (
        (1.115407433501094669e-01, 4.946238903984531143e-01, 7.511339080210953645e-01, 3.152503517091976848e-01, -2.262646939654398281e-01, -1.297668675672619398e-01, 9.750160558732305638e-02, 2.752286553030573041e-02, -3.158203931748602977e-02, 5.538422011614962340e-04, 4.777257510945510759e-03, -1.077301085308479591e-03,),
        (1.077301085308479591e-03, 4.777257510945510759e-03, -5.538422011614962340e-04, -3.158203931748602977e-02, -2.752286553030573041e-02, 9.750160558732305638e-02, 1.297668675672619398e-01, -2.262646939654398281e-01, -3.152503517091976848e-01, 7.511339080210953645e-01, -4.946238903984531143e-01, 1.115407433501094669e-01,),
        (-1.077301085308479591e-03, 4.777257510945510759e-03, 5.538422011614962340e-04, -3.158203931748602977e-02, 2.752286553030573041e-02, 9.750160558732305638e-02, -1.297668675672619398e-01, -2.262646939654398281e-01, 3.152503517091976848e-01, 7.511339080210953645e-01, 4.946238903984531143e-01, 1.115407433501094669e-01,),
        (1.115407433501094669e-01, -4.946238903984531143e-01, 7.511339080210953645e-01, -3.152503517091976848e-01, -2.262646939654398281e-01, 1.297668675672619398e-01, 9.750160558732305638e-02, -2.752286553030573041e-02, -3.158203931748602977e-02, -5.538422011614962340e-04, 4.777257510945510759e-03, 1.077301085308479591e-03,),
    ),
    'db7': (
        (7.785205408500918411e-02, 3.965393194819173406e-01, 7.291320908462352035e-01, 4.697822874051931774e-01, -1.439060039285649795e-01, -2.240361849938750094e-01, 7.130921926683027323e-02, 8.061260915108306446e-02, -3.802993693501441341e-02, -1.657454163066688149e-02, 1.255099855609984050e-02, 4.295779729213665692e-04, -1.801640704047491066e-03, 3.537137999745202407e-04,),
        (-3.537137999745202407e-04, -1.801640704047491066e-03, -4.295779729213665692e-04, 1.255099855609984050e-02, 1.657454163066688149e-02, -3.802993693501441341e-02, -8.061260915108306446e-02, 7.130921926683027323e-02, 2.240361849938750094e-01, -1.439060039285649795e-01, -4.697822874051931774e-01, 7.291320908462352035e-01, -3.965393194819173406e-01, 7.785205408500918411e-02,),
        (3.537137999745202407e-04, -1.801640704047491066e-03, 4.295779729213665692e-04, 1.255099855609984050e-02, -1.657454163066688149e-02, -3.802993693501441341e-02, 8.061260915108306446e-02, 7.130921926683027323e-02, -2.240361849938750094e-01, -1.439060039285649795e-01, 4.697822874051931774e-01, 7.291320908462352035e-01, 3.965393194819173406e-01, 7.785205408500918411e-02,),
        (7.785205408500918411e-02, -3.965393194819173406e-01, 7.291320908462352035e-01, -4.697822874051931774e-01, -1.439060039285649795e-01, 2.240361849938750094e-01, 7.130921926683027323e-02, -8.061260915108306446e-02, -3.802993693501441341e-02, 1.657454163066688149e-02, 1.255099855609984050e-02, -4.295779729213665692e-04, -1.801640704047491066e-03, -3.537137999745202407e-04,),
    ),
    'db8': (
        (5.441584224310401507e-02, 3.128715909143000018e-01, 6.756307362972898689e-01, 5.853546836542067311e-01, -1.582910525634930593e-02, -2.840155429615469629e-01, 4.724845739132827946e-04, 1.287474266204784723e-01, -1.736930100180754735e-02, -4.408825393079475463e-02, 1.398102791739828411e-02, 8.746094047405776617e-03, -4.870352993451574145e-03, -3.917403733769471040e-04, 6.754494064505694399e-04, -1.174767841247695483e-04,),
        (1.174767841247695483e-04, 6.754494064505694399e-04, 3.917403733769471040e-04, -4.870352993451574145e-03, -8.746094047405776617e-03, 1.398102791739828411e-02, 4.408825393079475463e-02, -1.736930100180754735e-02, -1.287474266204784723e-01, 4.724845739132827946e-04, 2.840155429615469629e-01, -1.582910525634930593e-02, -5.853546836542067311e-01, 6.756307362972898689e-01, -3.128715909143000018e-01, 5.441584224310401507e-02,),
        (-1.174767841247695483e-04, 6.754494064505694399e-04, -3.917403733769471040e-04, -4.870352993451574145e-03, 8.746094047405776617e-03, 1.398102791739828411e-02, -4.408825393079475463e-02, -1.736930100180754735e-02, 1.287474266204784723e-01, 4.724845739132827946e-04, -2.840155429615469629e-01, -1.582910525634930593e-02, 5.853546836542067311e-01, 6.756307362972898689e-01, 3.128715909143000018e-01, 5.441584224310401507e-02,),
        (5.441584224310401507e-02, -3.128715909143000018e-01, 6.756307362972898689e-01, -5.853546836542067311e-01, -1.582910525634930593e-02, 2.840155429615469629e-01, 4.724845739132827946e-04, -1.287474266204784723e-01, -1.736930100180754735e-02, 4.408825393079475463e-02, 1.398102791739828411e-02, -8.746094047405776617e-03, -4.870352993451574145e-03, 3.917403733769471040e-04, 6.754494064505694399e-04, 1.174767841247695483e-04,),
    ),
    'db9': (
        (3.807794736387834500e-02, 2.438346746125903408e-01, 6.048231236901110419e-01, 6.572880780513004062e-01, 1.331973858250075637e-01, -2.932737832791749155e-01, -9.684078322297645647e-02, 1.485407493381063759e-01, 3.072568147933337629e-02, -6.763282906132997430e-02, 2.509471148314519726e-04, 2.236166212367909564e-02, -4.723204757751397163e-03, -4.281503682463430258e-03, 1.847646883056226329e-03, 2.303857635231959457e-04, -2.519631889427101238e-04, 3.934732031627160258e-05,),
        (-3.934732031627160258e-05, -2.519631889427101238e-04, -2.303857635231959457e-04, 1.847646883056226329e-03, 4.281503682463430258e-03, -4.723204757751397163e-03, -2.236166212367909564e-02, 2.509471148314519726e-04, 6.763282906132997430e-02, 3.072568147933337629e-02, -1.485407493381063759e-01, -9.684078322297645647e-02, 2.932737832791749155e-01, 1.331973858250075637e-01, -6.572880780513004062e-01, 6.048231236901110419e-01, -2.438346746125903408e-01, 3.807794736387834500e-02,),
        (3.934732031627160258e-05, -2.519631889427101238e-04, 2.303857635231959457e-04, 1.847646883056226329e-03, -4.281503682463430258e-03, -4.723204757751397163e-03, 2.236166212367909564e-02, 2.509471148314519726e-04, -6.763282906132997430e-02, 3.072568147933337629e-02, 1.485407493381063759e-01, -9.684078322297645647e-02, -2.932737832791749155e-01, 1.331973858250075637e-01, 6.572880780513004062e-01, 6.048231236901110419e-01, 2.438346746125903408e-01, 3.807794736387834500e-02,),
        (3.807794736387834500e-02, -2.438346746125903408e-01, 6.048231236901110419e-01, -6.572880780513004062e-01, 1.331973858250075637e-01, 2.932737832791749155e-01, -9.684078322297645647e-02, -1.485407493381063759e-01, 3.072568147933337629e-02, 6.763282906132997430e-02, 2.509471148314519726e-04, -2.236166212367909564e-02, -4.723204757751397163e-03, 4.281503682463430258e-03, 1.847646883056226329e-03, -2.303857635231959457e-04, -2.519631889427101238e-04, -3.934732031627160258e-05,),
    ),
    'rbio1.1': (
        (7.071067811865475727e-01, 7.071067811865475727e-01,),
        (7.071067811865475727e-01, -7.071067811865475727e-01,),
        (7.071067811865475727e-01, 7.071067811865475727e-01,),
        (-7.071067811865475727e-01, 7.071067811865475727e-01,),
    ),
    'rbio2.2': (
        (0.000000000000000000e+00, 3.535533905932737864e-01, 7.071067811865475727e-01, 3.535533905932737864e-01, 0.000000000000000000e+00, 0.000000000000000000e+00,),
        (-0.000000000000000000e+00, -1.767766952966368932e-01, -3.535533905932737864e-01, 1.060660171779821415e+00, -3.535533905932737864e-01, -1.767766952966368932e-01,),
        (0.000000000000000000e+00, -1.767766952966368932e-01, 3.535533905932737864e-01, 1.060660171779821415e+00, 3.535533905932737864e-01, -1.767766952966368932e-01,),
        (0.000000000000000000e+00, -3.535533905932737864e-01, 7.071067811865475727e-01, -3.535533905932737864e-01, 0.000000000000000000e+00, -0.000000000000000000e+00,),
    ),
    'rbio3.1': (
        (1.767766952966368932e-01, 5.303300858899107073e-01, 5.303300858899107073e-01, 1.767766952966368932e-01,),
        (-3.535533905932737864e-01, -1.060660171779821415e+00, 1.060660171779821415e+00, 3.535533905932737864e-01,),
        (-3.535533905932737864e-01, 1.060660171779821415e+00, 1.060660171779821415e+00, -3.535533905932737864e-01,),
        (-1.767766952966368932e-01, 5.303300858899107073e-01, -5.303300858899107073e-01, 1.767766952966368932e-01,),
    ),
    'rbio3.3': (
        (0.000000000000000000e+00, 0.000000000000000000e+00, 1.767766952966368932e-01, 5.303300858899107073e-01, 5.303300858899107073e-01, 1.767766952966368932e-01, 0.000000000000000000e+00, 0.000000000000000000e+00,),
        (6.629126073623883841e-02, 1.988737822087165152e-01, -1.546796083845572711e-01, -9.943689110435824929e-01, 9.943689110435824929e-01, 1.546796083845572711e-01, -1.988737822087165152e-01, -6.629126073623883841e-02,),
        (6.629126073623883841e-02, -1.988737822087165152e-01, -1.546796083845572711e-01, 9.943689110435824929e-01, 9.943689110435824929e-01, -1.546796083845572711e-01, -1.988737822087165152e-01, 6.629126073623883841e-02,),
        (-0.000000000000000000e+00, 0.000000000000000000e+00, -1.767766952966368932e-01, 5.303300858899107073e-01, -5.303300858899107073e-01, 1.767766952966368932e-01, -0.000000000000000000e+00, 0.000000000000000000e+00,),
    ),
    'rbio3.9': (
        (0.000000000000000000e+00, 0.000000000000000000e+00, 0.000000000000000000e+00, 0.000000000000000000e+00, 0.000000000000000000e+00, 0.000000000000000000e+00, 0.000000000000000000e+00, 0.000000000000000000e+00, 1.767766952966368932e-01, 5.303300858899107073e-01, 5.303300858899107073e-01, 1.767766952966368932e-01, 0.000000000000000000e+00, 0.000000000000000000e+00, 0.000000000000000000e+00, 0.000000000000000000e+00, 0.000000000000000000e+00, 0.000000000000000000e+00, 0.000000000000000000e+00, 0.000000000000000000e+00,),
        (-6.797443727836990131e-04, -2.039233118351096823e-03, 5.060319219611981133e-03, 2.061891264110553637e-02, -1.411278793017584597e-02, -9.913478249423215982e-02, 1.230013626941931469e-02, 3.201919683607785672e-01, 2.050022711569885782e-03, -9.421257006782067789e-01, 9.421257006782067789e-01, -2.050022711569885782e-03, -3.201919683607785672e-01, -1.230013626941931469e-02, 9.913478249423215982e-02, 1.411278793017584597e-02, -2.061891264110553637e-02, -5.060319219611981133e-03, 2.039233118351096823e-03, 6.797443727836990131e-04,),
        (-6.797443727836990131e-04, 2.039233118351096823e-03, 5.060319219611981133e-03, -2.061891264110553637e-02, -1.411278793017584597e-02, 9.913478249423215982e-02, 1.230013626941931469e-02, -3.201919683607785672e-01, 2.050022711569885782e-03, 9.421257006782067789e-01, 9.421257006782067789e-01, 2.050022711569885782e-03, -3.201919683607785672e-01, 1.230013626941931469e-02, 9.913478249423215982e-02, -1.411278793017584597e-02, -2.061891264110553637e-02, 5.060319219611981133e-03, 2.039233118351096823e-03, -6.797443727836990131e-04,),
        (-0.000000000000000000e+00, 0.000000000000000000e+00, -0.000000000000000000e+00, 0.000000000000000000e+00, -0.000000000000000000e+00, 0.000000000000000000e+00, -0.000000000000000000e+00, 0.000000000000000000e+00, -1.767766952966368932e-01, 5.303300858899107073e-01, -5.303300858899107073e-01, 1.767766952966368932e-01, -0.000000000000000000e+00, 0.000000000000000000e+00, -0.000000000000000000e+00, 0.000000000000000000e+00, -0.000000000000000000e+00, 0.000000000000000000e+00, -0.000000000000000000e+00, 0.000000000000000000e+00,),
    ),
    'rbio4.4': (
        (0.000000000000000000e+00, -6.453888262893851813e-02, -4.068941760955854109e-02, 4.180922732222123184e-01, 7.884856164056646133e-01, 4.180922732222123184e-01, -4.068941760955854109e-02, -6.453888262893851813e-02, 0.000000000000000000e+00, 0.000000000000000000e+00,),
        (-0.000000000000000000e+00, 3.782845550699538706e-02, 2.384946501938008806e-02, -1.106244044184234443e-01, -3.774028556126538536e-01, 8.526986790094035484e-01, -3.774028556126538536e-01, -1.106244044184234443e-01, 2.384946501938008806e-02, 3.782845550699538706e-02,),
        (0.000000000000000000e+00, 3.782845550699538706e-02, -2.384946501938008806e-02, -1.106244044184234443e-01, 3.774028556126538536e-01, 8.526986790094035484e-01, 3.774028556126538536e-01, -1.106244044184234443e-01, -2.384946501938008806e-02, 3.782845550699538706e-02,),
        (0.000000000000000000e+00, 6.453888262893851813e-02, -4.068941760955854109e-02, -4.180922732222123184e-01, 7.884856164056646133e-01, -4.180922732222123184e-01, -4.068941760955854109e-02, 6.453888262893851813e-02, 0.000000000000000000e+00, -0.000000000000000000e+00,),
    ),
    'sym10': (
        (8.625782262259724378e-04, 7.154205420543397051e-04, -7.056764062587303488e-03, 5.956827837425190649e-04, 4.968612664694287834e-02, 2.624036505844898684e-02, -1.215521055485489499e-01, -1.501923883913785888e-02, 5.137098733480263135e-01, 7.669548365606094764e-01, 3.402160130234621604e-01, -8.787871151197512720e-02, -6.708990780838181012e-02, 3.384235466357522065e-02, -8.687521096892581981e-04, -2.300546135349751040e-02, -1.140429795217328497e-03, 5.071649198531799629e-03, 3.401492663148098709e-04, -4.101159158043983662e-04,),
        (4.101159158043983662e-04, 3.401492663148098709e-04, -5.071649198531799629e-03, -1.140429795217328497e-03, 2.300546135349751040e-02, -8.687521096892581981e-04, -3.384235466357522065e-02, -6.708990780838181012e-02, 8.787871151197512720e-02, 3.402160130234621604e-01, -7.669548365606094764e-01, 5.137098733480263135e-01, 1.501923883913785888e-02, -1.215521055485489499e-01, -2.624036505844898684e-02, 4.968612664694287834e-02, -5.956827837425190649e-04, -7.056764062587303488e-03, -7.154205420543397051e-04, 8.625782262259724378e-04,),
        (-4.101159158043983662e-04, 3.401492663148098709e-04, 5.071649198531799629e-03, -1.140429795217328497e-03, -2.300546135349751040e-02, -8.687521096892581981e-04, 3.384235466357522065e-02, -6.708990780838181012e-02, -8.787871151197512720e-02, 3.402160130234621604e-01, 7.669548365606094764e-01, 5.137098733480263135e-01, -1.501923883913785888e-02, -1.215521055485489499e-01, 2.624036505844898684e-02, 4.968612664694287834e-02, 5.956827837425190649e-04, -7.056764062587303488e-03, 7.154205420543397051e-04, 8.625782262259724378e-04,),
        (8.625782262259724378e-04, -7.154205420543397051e-04, -7.056764062587303488e-03, -5.956827837425190649e-04, 4.968612664694287834e-02, -2.624036505844898684e-02, -1.215521055485489499e-01, 1.501923883913785888e-02, 5.137098733480263135e-01, -7.669548365606094764e-01, 3.402160130234621604e-01, 8.787871151197512720e-02, -6.708990780838181012e-02, -3.384235466357522065e-02, -8.687521096892581981e-04, 2.300546135349751040e-02, -1.140429795217328497e-03, -5.071649198531799629e-03, 3.401492663148098709e-04, 4.101159158043983662e-04,),
    ),
    'sym2': (
        (4.829629131445341561e-01, 8.365163037378078315e-01, 2.241438680420133889e-01, -1.294095225512603697e-01,),
        (1.294095225512603697e-01, 2.241438680420133889e-01, -8.365163037378078315e-01, 4.829629131445341561e-01,),
        (-1.294095225512603697e-01, 2.241438680420133889e-01, 8.365163037378078315e-01, 4.829629131445341561e-01,),
        (4.829629131445341561e-01, -8.365163037378078315e-01, 2.241438680420133889e-01, 1.294095225512603697e-01,),
    ),
    'sym3': (
        (3.522629188570953335e-02, -8.544127388202664430e-02, -1.350110200102545843e-01, 4.598775021184915435e-01, 8.068915093110924364e-01, 3.326705529500825764e-01,),
        (-3.326705529500825764e-01, 8.068915093110924364e-01, -4.598775021184915435e-01, -1.350110200102545843e-01, 8.544127388202664430e-02, 3.522629188570953335e-02,),
        (3.326705529500825764e-01, 8.068915093110924364e-01, 4.598775021184915435e-01, -1.350110200102545843e-01, -8.544127388202664430e-02, 3.522629188570953335e-02,),
        (3.522629188570953335e-02, 8.544127388202664430e-02, -1.350110200102545843e-01, -4.598775021184915435e-01, 8.068915093110924364e-01, -3.326705529500825764e-01,),
    ),
    'sym4': (
        (-7.576571478950219762e-02, -2.963552764600248593e-02, 4.976186676327749026e-01, 8.037387518051319901e-01, 2.978577956053060083e-01, -9.921954357663351209e-02, -1.260396726203130181e-02, 3.222310060405145921e-02,),
        (-3.222310060405145921e-02, -1.260396726203130181e-02, 9.921954357663351209e-02, 2.978577956053060083e-01, -8.037387518051319901e-01, 4.976186676327749026e-01, 2.963552764600248593e-02, -7.576571478950219762e-02,),
        (3.222310060405145921e-02, -1.260396726203130181e-02, -9.921954357663351209e-02, 2.978577956053060083e-01, 8.037387518051319901e-01, 4.976186676327749026e-01, -2.963552764600248593e-02, -7.576571478950219762e-02,),
        (-7.576571478950219762e-02, 2.963552764600248593e-02, 4.976186676327749026e-01, -8.037387518051319901e-01, 2.978577956053060083e-01, 9.921954357663351209e-02, -1.260396726203130181e-02, -3.222310060405145921e-02,),
    ),
    'sym5': (
        (1.953888273524983024e-02, -2.110183402468904235e-02, -1.753280899080562338e-01, 1.660210576451084941e-02, 6.339789634567921661e-01, 7.234076904040408484e-01, 1.993975339768556121e-01, -3.913424930231384352e-02, 2.951949092570626751e-02, 2.733306834499877117e-02,),
        (-2.733306834499877117e-02, 2.951949092570626751e-02, 3.913424930231384352e-02, 1.993975339768556121e-01, -7.234076904040408484e-01, 6.339789634567921661e-01, -1.660210576451084941e-02, -1.753280899080562338e-01, 2.110183402468904235e-02, 1.953888273524983024e-02,),
        (2.733306834499877117e-02, 2.951949092570626751e-02, -3.913424930231384352e-02, 1.993975339768556121e-01, 7.234076904040408484e-01, 6.339789634567921661e-01, 1.660210576451084941e-02, -1.753280899080562338e-01, -2.110183402468904235e-02, 1.953888273524983024e-02,),
        (1.953888273524983024e-02, 2.110183402468904235e-02, -1.753280899080562338e-01, -1.660210576451084941e-02, 6.339789634567921661e-01, -7.234076904040408484e-01, 1.993975339768556121e-01, 3.913424930231384352e-02, 2.951949092570626751e-02, -2.733306834499877117e-02,),
    ),
    'sym6': (
        (-7.800708325032379431e-03, 1.767711864254007488e-03, 4.472490177078138063e-02, -2.106029251237084496e-02, -7.263752278637658488e-02, 3.379294217281657575e-01, 7.876411410286509041e-01, 4.910559419279736382e-01, -4.831174258569805036e-02, -1.179901111485200105e-01, 3.490712084222162212e-03, 1.540410932704482268e-02,),
        (-1.540410932704482268e-02, 3.490712084222162212e-03, 1.179901111485200105e-01, -4.831174258569805036e-02, -4.910559419279736382e-01, 7.876411410286509041e-01, -3.379294217281657575e-01, -7.263752278637658488e-02, 2.106029251237084496e-02, 4.472490177078138063e-02, -1.767711864254007488e-03, -7.800708325032379431e-03,),
        (1.540410932704482268e-02, 3.490712084222162212e-03, -1.179901111485200105e-01, -4.831174258569805036e-02, 4.910559419279736382e-01, 7.876411410286509041e-01, 3.379294217281657575e-01, -7.263752278637658488e-02, -2.106029251237084496e-02, 4.472490177078138063e-02, 1.767711864254007488e-03, -7.800708325032379431e-03,),
        (-7.800708325032379431e-03, -1.767711864254007488e-03, 4.472490177078138063e-02, 2.106029251237084496e-02, -7.263752278637658488e-02, -3.379294217281657575e-01, 7.876411410286509041e-01, -4.910559419279736382e-01, -4.831174258569805036e-02, 1.179901111485200105e-01, 3.490712084222162212e-03, -1.540410932704482268e-02,),
    ),
    'sym7': (
        (2.291833954053771379e-03, -3.283297847466810828e-03, -1.812660513133846144e-02, 2.046420757754603692e-02, 4.474234946835237842e-02, -1.010109208684202980e-01, -5.680447688966697856e-02, 4.836109156822677169e-01, 7.819215932917281675e-01, 3.602184609062601961e-01, -6.413128980738583285e-02, -6.490800354718849474e-02, 1.721337630080450529e-02, 1.201541928354919048e-02,),
        (-1.201541928354919048e-02, 1.721337630080450529e-02, 6.490800354718849474e-02, -6.413128980738583285e-02, -3.602184609062601961e-01, 7.819215932917281675e-01, -4.836109156822677169e-01, -5.680447688966697856e-02, 1.010109208684202980e-01, 4.474234946835237842e-02, -2.046420757754603692e-02, -1.812660513133846144e-02, 3.283297847466810828e-03, 2.291833954053771379e-03,),
        (1.201541928354919048e-02, 1.721337630080450529e-02, -6.490800354718849474e-02, -6.413128980738583285e-02, 3.602184609062601961e-01, 7.819215932917281675e-01, 4.836109156822677169e-01, -5.680447688966697856e-02, -1.010109208684202980e-01, 4.474234946835237842e-02, 2.046420757754603692e-02, -1.812660513133846144e-02, -3.283297847466810828e-03, 2.291833954053771379e-03,),
        (2.291833954053771379e-03, 3.283297847466810828e-03, -1.812660513133846144e-02, -2.046420757754603692e-02, 4.474234946835237842e-02, 1.010109208684202980e-01, -5.680447688966697856e-02, -4.836109156822677169e-01, 7.819215932917281675e-01, -3.602184609062601961e-01, -6.413128980738583285e-02, 6.490800354718849474e-02, 1.721337630080450529e-02, -1.201541928354919048e-02,),
    ),
    'sym8': (
        (1.889950332767689105e-03, -3.029205147241330874e-04, -1.495225833706219712e-02, 3.808752013894488742e-03, 4.913717967373028295e-02, -2.721902991710348566e-02, -5.194583810788180184e-02, 3.644418948361789479e-01, 7.771857516996280024e-01, 4.813596512590533893e-01, -6.127335906781107566e-02, -1.432942383512726403e-01, 7.607487324976608574e-03, 3.169508781152599597e-02, -5.421323318000107177e-04, -3.382415951005002339e-03,),
        (3.382415951005002339e-03, -5.421323318000107177e-04, -3.169508781152599597e-02, 7.607487324976608574e-03, 1.432942383512726403e-01, -6.127335906781107566e-02, -4.813596512590533893e-01, 7.771857516996280024e-01, -3.644418948361789479e-01, -5.194583810788180184e-02, 2.721902991710348566e-02, 4.913717967373028295e-02, -3.808752013894488742e-03, -1.495225833706219712e-02, 3.029205147241330874e-04, 1.889950332767689105e-03,),
        (-3.382415951005002339e-03, -5.421323318000107177e-04, 3.169508781152599597e-02, 7.607487324976608574e-03, -1.432942383512726403e-01, -6.127335906781107566e-02, 4.813596512590533893e-01, 7.771857516996280024e-01, 3.644418948361789479e-01, -5.194583810788180184e-02, -2.721902991710348566e-02, 4.913717967373028295e-02, 3.808752013894488742e-03, -1.495225833706219712e-02, -3.029205147241330874e-04, 1.889950332767689105e-03,),
        (1.889950332767689105e-03, 3.029205147241330874e-04, -1.495225833706219712e-02, -3.808752013894488742e-03, 4.913717967373028295e-02, 2.721902991710348566e-02, -5.194583810788180184e-02, -3.644418948361789479e-01, 7.771857516996280024e-01, -4.813596512590533893e-01, -6.127335906781107566e-02, 1.432942383512726403e-01, 7.607487324976608574e-03, -3.169508781152599597e-02, -5.421323318000107177e-04, 3.382415951005002339e-03,),
    ),
    'sym9': (
        (1.069490032908612014e-03, -4.731544986800435924e-04, -1.026406402763312131e-02, 8.859267493400267354e-03, 6.207778930288575248e-02, -1.823377077939550631e-02, -1.915508312972843685e-01, 3.527248803527104765e-02, 6.173384491409341646e-01, 7.178970827644124419e-01, 2.387609146073051691e-01, -5.456895843083335584e-02, 5.834627461249819805e-04, 3.022487885827519413e-02, -1.152821020767918689e-02, -1.327196778181713444e-02, 6.197808889855071753e-04, 1.400915525914656198e-03,),
        (-1.400915525914656198e-03, 6.197808889855071753e-04, 1.327196778181713444e-02, -1.152821020767918689e-02, -3.022487885827519413e-02, 5.834627461249819805e-04, 5.456895843083335584e-02, 2.387609146073051691e-01, -7.178970827644124419e-01, 6.173384491409341646e-01, -3.527248803527104765e-02, -1.915508312972843685e-01, 1.823377077939550631e-02, 6.207778930288575248e-02, -8.859267493400267354e-03, -1.026406402763312131e-02, 4.731544986800435924e-04, 1.069490032908612014e-03,),
        (1.400915525914656198e-03, 6.197808889855071753e-04, -1.327196778181713444e-02, -1.152821020767918689e-02, 3.022487885827519413e-02, 5.834627461249819805e-04, -5.456895843083335584e-02, 2.387609146073051691e-01, 7.178970827644124419e-01, 6.173384491409341646e-01, 3.527248803527104765e-02, -1.915508312972843685e-01, -1.823377077939550631e-02, 6.207778930288575248e-02, 8.859267493400267354e-03, -1.026406402763312131e-02, -4.731544986800435924e-04, 1.069490032908612014e-03,),
        (1.069490032908612014e-03, 4.731544986800435924e-04, -1.026406402763312131e-02, -8.859267493400267354e-03, 6.207778930288575248e-02, 1.823377077939550631e-02, -1.915508312972843685e-01, -3.527248803527104765e-02, 6.173384491409341646e-01, -7.178970827644124419e-01, 2.387609146073051691e-01, 5.456895843083335584e-02, 5.834627461249819805e-04, -3.022487885827519413e-02, -1.152821020767918689e-02, 1.327196778181713444e-02, 6.197808889855071753e-04, -1.400915525914656198e-03,),
    ),
}
